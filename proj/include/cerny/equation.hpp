#pragma once

#include <cerny/rowmon.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cerny {

// Row monomial solutions L of M_u * L = M_s, where M_s has every unit in
// column q. A row j of L is forced to column q iff j is a nonzero column of
// M_u; every other ("free") row may use any column.

inline RowMonomialMatrix sink_matrix(std::size_t n, State q = 0) {
  return RowMonomialMatrix::constant(n, q);
}

/// Column chosen for a free row of a minimal solution.
using FreePlacement = std::function<State(State free_row)>;

/// Lowest-index column other than q.
inline FreePlacement lowest_column_except(State q) {
  return [q](State) -> State { return q == 0 ? 1 : 0; };
}

inline bool is_solution(const RowMonomialMatrix& mu, const RowMonomialMatrix& l, State q = 0) {
  if (mu.size() != l.size()) throw SizeMismatch("equation operands differ in size");
  for (State t : mu.targets())
    if (l.target(t) != q) return false;
  return true;
}

/// L ⊑_q N: rows of L with unit in column q are a subset of those of N.
inline bool leq_q(const RowMonomialMatrix& l, const RowMonomialMatrix& n, State q = 0) {
  if (l.size() != n.size()) throw SizeMismatch("compared matrices differ in size");
  for (std::size_t r = 0; r < l.size(); ++r)
    if (l.target(r) == q && n.target(r) != q) return false;
  return true;
}

/// Solution with exactly |R(u)| units in column q. Every free row goes to
/// the column named by `policy`, which must differ from q.
inline RowMonomialMatrix minimal_solution(const RowMonomialMatrix& mu, State q = 0,
                                          const FreePlacement& policy = {}) {
  const std::size_t n = mu.size();
  if (q >= n) throw DomainError("q outside matrix");
  const FreePlacement place = policy ? policy : lowest_column_except(q);
  const ColumnSet fixed = nonzero_columns(mu);
  std::vector<State> t(n, q);
  for (State r = 0; r < n; ++r) {
    if (fixed.contains(r)) continue;
    const State c = place(r);
    if (c >= n) throw PolicyError("placement column " + std::to_string(c) + " outside matrix");
    if (c == q) {
      throw PolicyError("placement sends free row " + std::to_string(r) + " to column q = " +
                        std::to_string(q) + ", which breaks minimality");
    }
    t[r] = c;
  }
  return RowMonomialMatrix(std::move(t));
}

/// A solution is minimal iff its column-q unit count equals |R(u)|.
inline bool is_minimal_solution(const RowMonomialMatrix& mu, const RowMonomialMatrix& l,
                                State q = 0) {
  return is_solution(mu, l, q) && column_unit_counts(l)[q] == rank(mu);
}

inline constexpr std::uint64_t default_solution_budget = std::uint64_t{1} << 22;

/// Every L with the fixed rows sent to q and each free row ranging over
/// `allowed` columns, in lexicographic order of the free-row choices
/// (earliest free row most significant, columns in increasing order).
class SolutionEnumerator {
public:
  SolutionEnumerator(const RowMonomialMatrix& mu, State q, std::vector<State> allowed,
                     std::uint64_t budget = default_solution_budget)
      : n_(mu.size()), q_(q), allowed_(std::move(allowed)) {
    if (q >= n_) throw DomainError("q outside matrix");
    std::sort(allowed_.begin(), allowed_.end());
    allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
    for (State c : allowed_)
      if (c >= n_) throw DomainError("restriction column outside matrix");
    const ColumnSet fixed = nonzero_columns(mu);
    for (State r = 0; r < n_; ++r)
      if (!fixed.contains(r)) free_rows_.push_back(r);

    count_ = 1;
    for (std::size_t i = 0; i < free_rows_.size(); ++i) {
      if (allowed_.empty()) {
        count_ = 0;
        break;
      }
      if (count_ > budget / allowed_.size()) {
        throw CapacityError("budget", "solution count exceeds the budget of " +
                                          std::to_string(budget));
      }
      count_ *= allowed_.size();
    }
    if (count_ > budget) {
      throw CapacityError("budget", "solution count exceeds the budget of " +
                                        std::to_string(budget));
    }
    digits_.assign(free_rows_.size(), 0);
  }

  /// All columns allowed.
  SolutionEnumerator(const RowMonomialMatrix& mu, State q = 0)
      : SolutionEnumerator(mu, q, all_columns(mu.size())) {}

  std::uint64_t size() const noexcept { return count_; }
  const std::vector<State>& free_rows() const noexcept { return free_rows_; }

  std::optional<RowMonomialMatrix> next() {
    if (emitted_ >= count_) return std::nullopt;
    std::vector<State> t(n_, q_);
    for (std::size_t i = 0; i < free_rows_.size(); ++i) t[free_rows_[i]] = allowed_[digits_[i]];
    ++emitted_;
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < allowed_.size()) break;
      digits_[i] = 0;
    }
    return RowMonomialMatrix(std::move(t));
  }

  std::vector<RowMonomialMatrix> collect() {
    std::vector<RowMonomialMatrix> out;
    out.reserve(static_cast<std::size_t>(count_));
    while (auto l = next()) out.push_back(std::move(*l));
    return out;
  }

  static std::vector<State> all_columns(std::size_t n) {
    std::vector<State> c(n);
    for (State i = 0; i < n; ++i) c[i] = i;
    return c;
  }

  static std::vector<State> columns_except(std::size_t n, State q) {
    std::vector<State> c;
    for (State i = 0; i < n; ++i)
      if (i != q) c.push_back(i);
    return c;
  }

private:
  std::size_t n_;
  State q_;
  std::vector<State> allowed_;
  std::vector<State> free_rows_;
  std::vector<std::size_t> digits_;
  std::uint64_t count_ = 0;
  std::uint64_t emitted_ = 0;
};

inline std::vector<RowMonomialMatrix> enumerate_solutions(
    const RowMonomialMatrix& mu, State q, const std::vector<State>& restriction,
    std::uint64_t budget = default_solution_budget) {
  return SolutionEnumerator(mu, q, restriction, budget).collect();
}

}  // namespace cerny
