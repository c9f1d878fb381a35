#pragma once

#include <cerny/rowmon.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cerny {

// Exact linear algebra over Q for flattened row monomial matrices. Every
// elimination below is integer-preserving: rows are combined as
// p * row_i - a * row_r and then divided by their content, so no fraction
// appears before a final coefficient is read off.

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<BigInt>;

/// Exact coefficients λ_1..λ_m, aligned with the matrix list they refer to.
using RationalCoefficients = std::vector<Rational>;

/// "p/q" with the denominator always present, e.g. "-2/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Row-major 0/1 vector of length n^2 with exactly n ones.
inline IntVector flatten(const RowMonomialMatrix& m) {
  const std::size_t n = m.size();
  IntVector v(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + m.target(i)] = 1;
  return v;
}

/// Dense n x n rows of the matrix itself (not flattened).
inline std::vector<IntVector> dense_rows(const RowMonomialMatrix& m) {
  const std::size_t n = m.size();
  std::vector<IntVector> rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][m.target(i)] = 1;
  return rows;
}

namespace detail {

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Divide by the gcd of all entries and make the leading nonzero entry positive.
inline void normalize(IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, abs(x));
    if (g == 1) break;
  }
  if (g == 0) return;
  bool negate = false;
  for (const auto& x : v) {
    if (x != 0) {
      negate = x < 0;
      break;
    }
  }
  if (g == 1 && !negate) return;
  for (auto& x : v) {
    x /= g;
    if (negate) x = -x;
  }
}

/// target := pivot_value * target - target[col] * pivot_row, then normalize.
inline void eliminate(IntVector& target, const IntVector& pivot_row, std::size_t col) {
  if (target[col] == 0) return;
  const BigInt p = pivot_row[col];
  const BigInt a = target[col];
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = p * target[j] - a * pivot_row[j];
  normalize(target);
}

/// In-place reduced echelon form choosing pivots among the first
/// `pivot_cols` columns. Returns the pivot column of each leading row;
/// rows past the returned size are zero in the first `pivot_cols` columns.
inline std::vector<std::size_t> reduce_rows(std::vector<IntVector>& rows,
                                            std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows.size(); ++col) {
    std::size_t found = r;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[r], rows[found]);
    normalize(rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i], rows[r], col);
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

/// Column system: one row per coordinate, one column per vector, plus an
/// optional right-hand side column.
inline std::vector<IntVector> column_system(const std::vector<IntVector>& columns,
                                            std::size_t dim, const IntVector* rhs) {
  std::vector<IntVector> rows(dim, IntVector(columns.size() + (rhs ? 1 : 0), 0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t i = 0; i < dim; ++i) rows[i][c] = columns[c][i];
  if (rhs)
    for (std::size_t i = 0; i < dim; ++i) rows[i][columns.size()] = (*rhs)[i];
  return rows;
}

inline void check_sizes(const std::vector<RowMonomialMatrix>& set, std::size_t n) {
  for (const auto& m : set) {
    if (m.size() != n) {
      throw SizeMismatch("matrix of size " + std::to_string(m.size()) +
                         " in a set of size " + std::to_string(n));
    }
  }
}

}  // namespace detail

/// Exact rank of the matrix whose rows are `rows`.
inline std::size_t exact_rank(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  return detail::reduce_rows(rows, rows.front().size()).size();
}

/// Exact rank of the span of the flattened matrices.
inline std::size_t exact_rank(const std::vector<RowMonomialMatrix>& set) {
  std::vector<IntVector> rows;
  rows.reserve(set.size());
  for (const auto& m : set) rows.push_back(flatten(m));
  return exact_rank(std::move(rows));
}

/// Exact rank of M viewed as an n x n matrix.
inline std::size_t matrix_rank(const RowMonomialMatrix& m) { return exact_rank(dense_rows(m)); }

/// Incrementally maintained basis of a subspace of Q^dim. Keeps the
/// accepted vectors in insertion order and an echelon copy for membership
/// tests; each echelon row is zero at the pivots of all earlier rows.
class RationalBasis {
public:
  explicit RationalBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Basis for flattened n x n matrices.
  static RationalBasis for_matrices(std::size_t n) { return RationalBasis(n * n); }

  std::size_t ambient_dimension() const noexcept { return dim_; }
  std::size_t dimension() const noexcept { return stored_.size(); }

  /// Accepted vectors, in insertion order.
  const std::vector<IntVector>& vectors() const noexcept { return stored_; }

  /// Outcome of every insert call, in call order.
  const std::vector<bool>& insertion_log() const noexcept { return log_; }

  bool contains(const IntVector& v) const { return detail::is_zero(reduce(v)); }
  bool contains(const RowMonomialMatrix& m) const { return contains(checked_flatten(m)); }

  /// Adds v iff it is outside the current span; returns whether it was added.
  bool insert(const IntVector& v) {
    if (v.size() != dim_) {
      throw SizeMismatch("vector of length " + std::to_string(v.size()) +
                         " for a basis of ambient dimension " + std::to_string(dim_));
    }
    IntVector r = reduce(v);
    const bool added = !detail::is_zero(r);
    if (added) {
      std::size_t pivot = 0;
      while (r[pivot] == 0) ++pivot;
      echelon_.push_back(std::move(r));
      pivots_.push_back(pivot);
      stored_.push_back(v);
    }
    log_.push_back(added);
    return added;
  }

  bool insert(const RowMonomialMatrix& m) { return insert(checked_flatten(m)); }

private:
  IntVector reduce(IntVector v) const {
    for (std::size_t i = 0; i < echelon_.size(); ++i) detail::eliminate(v, echelon_[i], pivots_[i]);
    return v;
  }

  IntVector checked_flatten(const RowMonomialMatrix& m) const {
    if (m.size() * m.size() != dim_) {
      throw SizeMismatch(std::to_string(m.size()) + "x" + std::to_string(m.size()) +
                         " matrix for a basis of ambient dimension " + std::to_string(dim_));
    }
    return flatten(m);
  }

  std::size_t dim_;
  std::vector<IntVector> stored_;
  std::vector<IntVector> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> log_;
};

/// Exact λ with Σ λ_i flatten(set[i]) = flatten(target), or nullopt when
/// target is outside the span. Free variables of an underdetermined
/// system are set to zero.
inline std::optional<RationalCoefficients> express(const RowMonomialMatrix& target,
                                                   const std::vector<RowMonomialMatrix>& set) {
  const std::size_t n = target.size();
  detail::check_sizes(set, n);
  std::vector<IntVector> columns;
  for (const auto& m : set) columns.push_back(flatten(m));
  const IntVector rhs = flatten(target);
  auto rows = detail::column_system(columns, n * n, &rhs);
  const auto pivots = detail::reduce_rows(rows, set.size());
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][set.size()] != 0) return std::nullopt;

  RationalCoefficients lambda(set.size(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    lambda[pivots[r]] = Rational(rows[r][set.size()], rows[r][pivots[r]]);
  return lambda;
}

/// A nontrivial λ with Σ λ_i flatten(set[i]) = 0, or nullopt when the set
/// is linearly independent. The first free variable is set to one and the
/// others to zero.
inline std::optional<RationalCoefficients> find_relation(
    const std::vector<RowMonomialMatrix>& set) {
  if (set.empty()) return std::nullopt;
  const std::size_t n = set.front().size();
  detail::check_sizes(set, n);
  std::vector<IntVector> columns;
  for (const auto& m : set) columns.push_back(flatten(m));
  auto rows = detail::column_system(columns, n * n, nullptr);
  const auto pivots = detail::reduce_rows(rows, set.size());
  if (pivots.size() == set.size()) return std::nullopt;

  std::size_t free_col = 0;
  for (std::size_t r = 0; r < pivots.size() && pivots[r] == free_col; ++r) ++free_col;

  RationalCoefficients lambda(set.size(), Rational(0));
  lambda[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    lambda[pivots[r]] = Rational(-rows[r][free_col], rows[r][pivots[r]]);
  return lambda;
}

/// Σ λ_i M_i as a dense row-major n^2 vector of rationals.
inline std::vector<Rational> combine(const RationalCoefficients& lambda,
                                     const std::vector<RowMonomialMatrix>& set,
                                     std::size_t n) {
  if (lambda.size() != set.size()) {
    throw SizeMismatch(std::to_string(lambda.size()) + " coefficients for " +
                       std::to_string(set.size()) + " matrices");
  }
  detail::check_sizes(set, n);
  std::vector<Rational> out(n * n, Rational(0));
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t r = 0; r < n; ++r) out[r * n + set[i].target(r)] += lambda[i];
  }
  return out;
}

/// True iff Σ λ_i M_i equals `target` exactly (the zero matrix when
/// target is nullopt).
inline bool reproduces(const RationalCoefficients& lambda,
                       const std::vector<RowMonomialMatrix>& set,
                       const std::optional<RowMonomialMatrix>& target, std::size_t n) {
  const auto sum = combine(lambda, set, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int expected = target ? target->at(r, c) : 0;
      if (sum[r * n + c] != expected) return false;
    }
  }
  return true;
}

struct SumVerdict {
  Rational coefficient_sum;
  std::vector<Rational> row_sums;
  Rational expected;  // 1 for a row monomial target, 0 for the zero matrix
  std::vector<std::string> violations;

  bool holds() const noexcept { return violations.empty(); }
};

/// Necessary summation conditions for λ expressing a row monomial target
/// (coefficient sum and every row sum equal 1) or the zero matrix (both
/// equal 0). Row sums are read from the combination itself.
inline SumVerdict check_sum_conditions(const RationalCoefficients& lambda,
                                       const std::vector<RowMonomialMatrix>& set,
                                       const std::optional<RowMonomialMatrix>& target) {
  std::size_t n = 0;
  if (target) {
    n = target->size();
  } else if (!set.empty()) {
    n = set.front().size();
  }
  SumVerdict v;
  v.expected = target ? 1 : 0;
  v.coefficient_sum = 0;
  for (const auto& l : lambda) v.coefficient_sum += l;
  if (v.coefficient_sum != v.expected) {
    v.violations.push_back("coefficient sum " + to_string(v.coefficient_sum) + " != " +
                           to_string(v.expected));
  }
  if (n == 0) return v;
  const auto sum = combine(lambda, set, n);
  v.row_sums.assign(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) v.row_sums[r] += sum[r * n + c];
    if (v.row_sums[r] != v.expected) {
      v.violations.push_back("row " + std::to_string(r) + " sums to " +
                             to_string(v.row_sums[r]) + " != " + to_string(v.expected));
    }
  }
  return v;
}

/// Spanning set of the n x k row monomial matrices (embedded as n x n with
/// zero columns k..n-1). V(i,j) for i in [0,n), j in [0,k-1), i-major,
/// has its unit of row i in column j and every other row in column k-1;
/// the final matrix K has every unit in column k-1.
inline std::vector<RowMonomialMatrix> vij_basis(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) {
    throw DomainError("basis needs 2 <= k <= n, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  const auto last = static_cast<State>(k - 1);
  std::vector<RowMonomialMatrix> out;
  out.reserve(n * (k - 1) + 1);
  for (State i = 0; i < n; ++i) {
    for (State j = 0; j < last; ++j) {
      std::vector<State> t(n, last);
      t[i] = j;
      out.emplace_back(std::move(t));
    }
  }
  out.push_back(RowMonomialMatrix::constant(n, last));
  return out;
}

/// Coefficients of T over vij_basis(n, k): one for every V(i, T(i)) with
/// T(i) < k-1, and 1 - m on K where m counts those rows. The result is
/// re-evaluated before it is returned.
inline RationalCoefficients decompose_vij(const RowMonomialMatrix& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k < 2 || k > n) throw DomainError("decomposition needs 2 <= k <= n");
  for (std::size_t i = 0; i < n; ++i) {
    if (t.target(i) >= k) {
      throw DomainError("row " + std::to_string(i) + " has its unit in column " +
                        std::to_string(t.target(i)) + ", outside the first " +
                        std::to_string(k));
    }
  }
  RationalCoefficients lambda(n * (k - 1) + 1, Rational(0));
  long m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.target(i) < k - 1) {
      lambda[i * (k - 1) + t.target(i)] = 1;
      ++m;
    }
  }
  lambda.back() = Rational(1 - m);
  if (!reproduces(lambda, vij_basis(n, k), t, n)) {
    throw std::logic_error("decomposition failed to reproduce " + to_compact(t));
  }
  return lambda;
}

}  // namespace cerny
