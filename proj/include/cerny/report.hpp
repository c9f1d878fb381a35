#pragma once

#include <cerny/automaton_io.hpp>
#include <cerny/probe.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace cerny {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

inline Json to_json(const Dfa& dfa) {
  return Json{{"n", dfa.states()}, {"k", dfa.letters()}, {"delta", dfa.table()}};
}

inline Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

inline Json to_json(const RationalCoefficients& lambda) {
  Json out = Json::array();
  for (const auto& l : lambda) out.push_back(to_string(l));
  return out;
}

inline Json to_json(const PrefixTrace& trace, std::size_t alphabet, bool with_basis) {
  Json records = Json::array();
  for (const auto& r : trace.records) {
    records.push_back(Json{{"length", r.length},
                           {"prefix", format_word(r.prefix, alphabet)},
                           {"matrix", to_compact(r.matrix)},
                           {"image_size", r.image_size},
                           {"dimension", r.dimension}});
  }
  Json out{{"records", records},
           {"dimension_bound", row_monomial_span_bound(trace.n)},
           {"monotone", trace.monotone()}};
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& v : trace.basis) basis.push_back(to_json(v));
    out["basis"] = basis;
  }
  return out;
}

inline Json to_json(const BoundVerdict& v) {
  Json out{{"n", v.n}, {"synchronizing", v.synchronizing}};
  out["shortest_length"] = v.shortest_length ? Json(*v.shortest_length) : Json(nullptr);
  out["cerny_bound"] = v.cerny_bound;
  out["cubic_bound"] = v.cubic_bound;
  out["verdict"] = !v.synchronizing ? "not-synchronizing"
                   : v.within_bound ? "within-bound"
                                    : "exceeds-bound";
  return out;
}

inline Json to_json(const ProbeReport& r) {
  const std::size_t k = r.automaton.letters();
  Json assignments = Json::array();
  for (const auto& a : r.matching.assignments) {
    Json item{{"prefix_length", a.prefix_length}, {"image_size", a.image_size}};
    item["cell"] = a.cell ? Json::array({a.cell->row, a.cell->col}) : Json(nullptr);
    assignments.push_back(item);
  }
  Json solutions = Json::array();
  for (const auto& s : r.solutions) {
    solutions.push_back(Json{{"prefix_length", s.prefix_length},
                             {"cell", Json::array({s.cell.row, s.cell.col})},
                             {"matrix", to_compact(s.matrix)},
                             {"solves", s.solves}});
  }

  Json out;
  out["schema_version"] = report_schema_version;
  out["automaton"] = to_json(r.automaton);
  out["q"] = r.q;
  out["reset_word"] = format_word(r.reset_word, k);
  out["prefix_trace"] = to_json(r.trace, k, false);
  out["matching"] = Json{{"cells", r.matching.cells.size()},
                         {"prefixes_with_rank_gt1", r.matching.prefixes_with_rank_gt1},
                         {"candidates", r.matching.candidates},
                         {"matched", r.matching.matched},
                         {"success", r.matching.full},
                         {"assignments", assignments},
                         {"solutions", solutions},
                         {"all_solutions_valid", r.all_solutions_valid}};
  out["independence_rank"] = r.independence_rank;
  out["independence_expected"] = r.independence_expected;
  out["independent"] = r.independent();
  out["sink_outside_span"] = r.sink_outside_span;
  out["collapse_within_cells"] = r.collapse_within_cells;
  if (r.prefix_column) {
    Json verdicts = Json::array();
    for (const auto& v : r.prefix_column->verdicts)
      verdicts.push_back(Json{{"prefix_length", v.prefix_length},
                              {"column_q_nonzero", v.column_q_nonzero}});
    out["corollary1_verdicts"] =
        Json{{"verdicts", verdicts}, {"counterexamples", r.prefix_column->counterexamples}};
  } else {
    out["corollary1_verdicts"] = nullptr;
  }
  out["bound_verdict"] = r.bound ? to_json(*r.bound) : Json(nullptr);
  out["q_fallback"] = r.q_fallback;
  Json notes = Json::array(
      {"prefixes are nonempty; the empty prefix (identity) is excluded",
       "dimensions count nonzero subspaces only; the zero subspace is not a chain member"});
  if (r.q_fallback)
    notes.push_back("no reset word ends in state 0; q is the state the shortest reset word reaches");
  out["notes"] = notes;
  return out;
}

}  // namespace cerny
