#pragma once

#include <cerny/automaton.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace cerny {

/// Set of nonzero column indices of a row monomial matrix.
using ColumnSet = StateSet;

/// n x n 0/1 matrix with exactly one unit per row, stored as the column of
/// each row's unit: entry (i, j) is 1 iff target(i) == j.
class RowMonomialMatrix {
public:
  RowMonomialMatrix() = default;

  explicit RowMonomialMatrix(std::vector<State> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) throw DomainError("row monomial matrix needs n >= 1");
    for (State t : targets_) {
      if (t >= targets_.size()) {
        throw DomainError("unit column " + std::to_string(t) + " outside [0, " +
                          std::to_string(targets_.size()) + ")");
      }
    }
  }

  static RowMonomialMatrix identity(std::size_t n) {
    std::vector<State> t(n);
    for (State i = 0; i < n; ++i) t[i] = i;
    return RowMonomialMatrix(std::move(t));
  }

  /// All units in column q: the matrix of a word synchronizing to q.
  static RowMonomialMatrix constant(std::size_t n, State q) {
    if (q >= n) throw DomainError("column " + std::to_string(q) + " outside matrix");
    return RowMonomialMatrix(std::vector<State>(n, q));
  }

  std::size_t size() const noexcept { return targets_.size(); }
  State target(std::size_t row) const { return targets_[row]; }
  const std::vector<State>& targets() const noexcept { return targets_; }

  int at(std::size_t row, std::size_t col) const { return targets_[row] == col ? 1 : 0; }

  friend bool operator==(const RowMonomialMatrix&, const RowMonomialMatrix&) = default;
  friend auto operator<=>(const RowMonomialMatrix&, const RowMonomialMatrix&) = default;

private:
  std::vector<State> targets_;
};

/// M_u: row i has its unit in the column of the image of state i under u.
inline RowMonomialMatrix matrix_of_word(const Dfa& dfa, const Word& u) {
  dfa.check_word(u);
  std::vector<State> t(dfa.states());
  for (State i = 0; i < dfa.states(); ++i) t[i] = dfa.image(i, u);
  return RowMonomialMatrix(std::move(t));
}

/// Ordinary matrix product; M_u * M_v = M_uv.
inline RowMonomialMatrix multiply(const RowMonomialMatrix& a, const RowMonomialMatrix& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("cannot multiply " + std::to_string(a.size()) + "x" +
                       std::to_string(a.size()) + " by " + std::to_string(b.size()) + "x" +
                       std::to_string(b.size()));
  }
  std::vector<State> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) t[i] = b.target(a.target(i));
  return RowMonomialMatrix(std::move(t));
}

inline ColumnSet nonzero_columns(const RowMonomialMatrix& m) {
  ColumnSet out(m.size());
  for (State t : m.targets()) out.insert(t);
  return out;
}

inline std::size_t rank(const RowMonomialMatrix& m) { return nonzero_columns(m).size(); }

inline bool is_permutation(const RowMonomialMatrix& m) { return rank(m) == m.size(); }

/// Number of units in each column.
inline std::vector<std::size_t> column_unit_counts(const RowMonomialMatrix& m) {
  std::vector<std::size_t> counts(m.size(), 0);
  for (State t : m.targets()) ++counts[t];
  return counts;
}

/// Rows whose unit lies in column `col`.
inline StateSet rows_in_column(const RowMonomialMatrix& m, State col) {
  StateSet out(m.size());
  for (State i = 0; i < m.size(); ++i)
    if (m.target(i) == col) out.insert(i);
  return out;
}

/// n lines of space-separated 0/1 entries.
inline std::string to_grid(const RowMonomialMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

/// Single-line target sequence, e.g. "[1,2,3,0]".
inline std::string to_compact(const RowMonomialMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m.target(i));
  }
  return out + "]";
}

}  // namespace cerny
