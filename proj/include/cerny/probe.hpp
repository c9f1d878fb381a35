#pragma once

#include <cerny/equation.hpp>
#include <cerny/exactlin.hpp>
#include <cerny/matching.hpp>
#include <cerny/reset_word.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cerny {

// Mechanical run of the allocation argument for the (n-1)^2 bound on one
// automaton and one reset word. Nothing here assumes the argument is
// sound: each step records what it observed, and every independence claim
// is re-checked by exact elimination.

/// n(n-1)+1: largest possible dimension of a span of n x n row monomial matrices.
inline std::size_t row_monomial_span_bound(std::size_t n) { return n * (n - 1) + 1; }

/// n(n-2) for n >= 2, else 0: cells in the interior columns 1..n-2.
inline std::size_t interior_cell_count(std::size_t n) { return n >= 2 ? n * (n - 2) : 0; }

struct PrefixRecord {
  std::size_t length = 0;
  Word prefix;
  RowMonomialMatrix matrix;
  std::size_t image_size = 0;  // |R(u_i)|
  std::size_t dimension = 0;   // span of M_{u_1}..M_{u_i}
};

/// Nonempty prefixes u_1..u_|s| in length order. The empty prefix
/// (identity matrix) is excluded.
struct PrefixTrace {
  std::size_t n = 0;
  std::vector<PrefixRecord> records;
  std::vector<IntVector> basis;  // accepted flattened matrices, insertion order

  /// Non-increasing image sizes and non-decreasing dimension capped at n(n-1)+1.
  bool monotone() const {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].dimension > row_monomial_span_bound(n)) return false;
      if (i == 0) continue;
      if (records[i].image_size > records[i - 1].image_size) return false;
      if (records[i].dimension < records[i - 1].dimension) return false;
    }
    return true;
  }
};

/// Throws DomainError unless `s` synchronizes `dfa`; returns the final state.
inline State synchronized_state(const Dfa& dfa, const Word& s) {
  const StateSet image = apply_word(dfa, StateSet::full(dfa.states()), s);
  if (image.size() != 1) {
    throw DomainError("word does not synchronize the automaton (image has " +
                      std::to_string(image.size()) + " states)");
  }
  return image.members().front();
}

inline PrefixTrace prefix_trace(const Dfa& dfa, const Word& s) {
  synchronized_state(dfa, s);
  const std::size_t n = dfa.states();
  PrefixTrace trace;
  trace.n = n;
  auto basis = RationalBasis::for_matrices(n);
  RowMonomialMatrix current = RowMonomialMatrix::identity(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    current = multiply(current, matrix_of_word(dfa, Word{s[i]}));
    basis.insert(current);
    trace.records.push_back(
        PrefixRecord{i + 1, s.prefix(i + 1), current, rank(current), basis.dimension()});
  }
  trace.basis = basis.vectors();
  return trace;
}

struct Cell {
  State row = 0;
  State col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Assignment {
  std::size_t prefix_length = 0;
  std::size_t image_size = 0;
  std::optional<Cell> cell;  // nullopt when the matching left this prefix out
};

struct MatchingResult {
  std::vector<Cell> cells;                // interior cells, column-major
  std::size_t prefixes_with_rank_gt1 = 0;  // over the whole word
  std::size_t candidates = 0;             // min(prefixes_with_rank_gt1, n(n-2))
  std::size_t matched = 0;
  bool full = false;                      // every candidate owns a cell
  std::vector<Assignment> assignments;    // in matching priority order
};

struct ProbeSolution {
  std::size_t prefix_length = 0;
  Cell cell;
  RowMonomialMatrix matrix;
  bool solves = false;  // M_{u_i} L_i = M_s
};

struct BoundVerdict {
  std::size_t n = 0;
  bool synchronizing = false;
  std::optional<std::size_t> shortest_length;
  std::size_t cerny_bound = 0;   // (n-1)^2
  std::size_t cubic_bound = 0;  // (n^3-n)/6
  bool within_bound = true;      // false flags a counterexample to the (n-1)^2 bound
};

struct PrefixColumnVerdict {
  std::size_t prefix_length = 0;
  bool column_q_nonzero = false;
};

struct PrefixColumnReport {
  std::vector<PrefixColumnVerdict> verdicts;
  std::size_t counterexamples = 0;
};

struct ProbeReport {
  Dfa automaton;
  State q = 0;
  Word reset_word;
  PrefixTrace trace;
  MatchingResult matching;
  std::vector<ProbeSolution> solutions;
  std::size_t independence_rank = 0;       // exact rank of {L_i} ∪ {M_s}
  std::size_t independence_expected = 0;   // |{L_i}| + 1
  bool sink_outside_span = true;           // M_s not expressible from the L_i
  bool all_solutions_valid = true;
  // Whether at most n(n-2) prefixes have |R| > 1, i.e. the word collapses
  // once the interior cells are used up.
  bool collapse_within_cells = true;
  std::optional<PrefixColumnReport> prefix_column;
  std::optional<BoundVerdict> bound;
  bool q_fallback = false;  // no reset word reaches state 0; q is where the shortest one ends

  bool independent() const noexcept { return independence_rank == independence_expected; }
};

/// Cells (row, col) with col in [1, n-2] and col != q, column-major.
inline std::vector<Cell> interior_cells(std::size_t n, State q) {
  std::vector<Cell> cells;
  for (State c = 1; c + 1 < n; ++c) {
    if (c == q) continue;
    for (State r = 0; r < n; ++r) cells.push_back(Cell{r, c});
  }
  return cells;
}

/// Assigns to each prefix with |R(u_i)| > 1 (the first n(n-2) of them) a
/// distinct interior cell whose row is free in M_{u_i} L = M_s, by maximum
/// bipartite matching with larger |R(u_i)| taking priority. For every matched
/// prefix it builds L_i with the unit of the cell's row in that cell and all
/// other rows in column q, checks it solves its equation, and measures the
/// exact rank of {L_i} ∪ {M_s}.
inline ProbeReport allocation_probe(const Dfa& dfa, const Word& s, State q = 0) {
  const std::size_t n = dfa.states();
  if (q >= n) throw DomainError("q = " + std::to_string(q) + " outside the state range");
  const State reached = synchronized_state(dfa, s);
  if (reached != q) {
    throw DomainError("word synchronizes to state " + std::to_string(reached) +
                      ", not to q = " + std::to_string(q));
  }

  ProbeReport report{dfa, q, s, prefix_trace(dfa, s), {}, {}, 0, 0, true, true, true, {}, {}, false};
  MatchingResult& m = report.matching;
  m.cells = interior_cells(n, q);

  std::vector<const PrefixRecord*> candidates;
  for (const auto& rec : report.trace.records) {
    if (rec.image_size <= 1) continue;
    ++m.prefixes_with_rank_gt1;
    if (candidates.size() < interior_cell_count(n)) candidates.push_back(&rec);
  }
  m.candidates = candidates.size();
  report.collapse_within_cells = m.prefixes_with_rank_gt1 <= interior_cell_count(n);

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const PrefixRecord* a, const PrefixRecord* b) {
                     return a->image_size > b->image_size;
                   });

  BipartiteMatcher matcher(candidates.size(), m.cells.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const ColumnSet fixed = nonzero_columns(candidates[i]->matrix);
    for (std::size_t c = 0; c < m.cells.size(); ++c)
      if (!fixed.contains(m.cells[c].row)) matcher.add_edge(i, c);
  }
  m.matched = matcher.solve();
  m.full = m.matched == candidates.size();

  std::vector<RowMonomialMatrix> chosen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Assignment a{candidates[i]->length, candidates[i]->image_size, std::nullopt};
    const std::size_t cell_index = matcher.partner_of_left(i);
    if (cell_index != BipartiteMatcher::unmatched) {
      const Cell cell = m.cells[cell_index];
      a.cell = cell;
      std::vector<State> t(n, q);
      t[cell.row] = cell.col;
      RowMonomialMatrix l(std::move(t));
      const bool ok = is_solution(candidates[i]->matrix, l, q);
      report.all_solutions_valid = report.all_solutions_valid && ok;
      report.solutions.push_back(ProbeSolution{candidates[i]->length, cell, l, ok});
      chosen.push_back(std::move(l));
    }
    m.assignments.push_back(a);
  }

  const RowMonomialMatrix sink = sink_matrix(n, q);
  report.sink_outside_span = !express(sink, chosen).has_value();
  chosen.push_back(sink);
  report.independence_rank = exact_rank(chosen);
  report.independence_expected = chosen.size();
  return report;
}

/// For every nonempty prefix u of s, whether column q of M_u is nonzero.
inline PrefixColumnReport check_prefix_column(const Dfa& dfa, const Word& s, State q = 0) {
  if (q >= dfa.states()) throw DomainError("q outside the state range");
  dfa.check_word(s);
  PrefixColumnReport out;
  RowMonomialMatrix current = RowMonomialMatrix::identity(dfa.states());
  for (std::size_t i = 0; i < s.size(); ++i) {
    current = multiply(current, matrix_of_word(dfa, Word{s[i]}));
    const bool hit = column_unit_counts(current)[q] > 0;
    out.verdicts.push_back(PrefixColumnVerdict{i + 1, hit});
    if (!hit) ++out.counterexamples;
  }
  return out;
}

/// Compares the exact shortest reset length against (n-1)^2.
inline BoundVerdict bound_check(const Dfa& dfa, std::size_t limit = default_exact_limit) {
  const std::size_t n = dfa.states();
  BoundVerdict v;
  v.n = n;
  v.cerny_bound = (n - 1) * (n - 1);
  v.cubic_bound = (n * n * n - n) / 6;
  const auto word = shortest_reset_word(dfa, limit);
  v.synchronizing = word.has_value();
  if (word) {
    v.shortest_length = word->size();
    v.within_bound = word->size() <= v.cerny_bound;
  }
  return v;
}

/// allocation_probe plus the prefix-column and bound checks. Without an
/// explicit word the exact shortest reset word to q is used, q defaulting to
/// 0. When no reset word ends in state 0 and q was not given, the shortest
/// reset word is used and q is the state it reaches. With an explicit word
/// and no q, q is the state the word reaches.
inline ProbeReport full_probe(const Dfa& dfa, std::optional<Word> s = std::nullopt,
                              std::optional<State> q = std::nullopt,
                              std::size_t limit = default_exact_limit) {
  bool fallback = false;
  if (!s) {
    s = shortest_reset_word(dfa, limit, q.value_or(0));
    if (!s && !q) {
      s = shortest_reset_word(dfa, limit);
      fallback = s.has_value();
    }
    if (!s) throw DomainError("automaton has no reset word" +
                              (q ? " to state " + std::to_string(*q) : std::string()));
  }
  const State target = q ? *q : synchronized_state(dfa, *s);
  ProbeReport report = allocation_probe(dfa, *s, target);
  report.q_fallback = fallback;
  report.prefix_column = check_prefix_column(dfa, *s, target);
  report.bound = bound_check(dfa, limit);
  return report;
}

}  // namespace cerny
