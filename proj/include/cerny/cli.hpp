#pragma once

#include <cerny/automaton_io.hpp>
#include <cerny/generators.hpp>
#include <cerny/suites.hpp>
#include <cerny/probe.hpp>
#include <cerny/report.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cerny::cli {

enum ExitStatus : int { completed = 0, usage_error = 1, flagged = 2 };

struct RunConfig {
  std::string subcommand;
  std::string input;      // automaton file; "-" reads stdin
  std::string generator;  // gen: "cerny" | "random"
  std::size_t n = 0;
  std::size_t k = 2;
  std::optional<std::string> word;
  std::optional<State> q;
  std::size_t limit = default_exact_limit;
  std::uint64_t budget = default_enumeration_budget;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  bool json = false;
  bool filter_sync = false;
  bool dot = false;
  std::string output;  // empty: the caller's stream
};

namespace detail {

inline Dfa load_input(const RunConfig& cfg, std::istream& in) {
  if (cfg.input.empty()) throw std::invalid_argument("no automaton file given");
  if (cfg.input == "-") return read_dfa(in);
  return load_dfa(cfg.input);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string word_text(const Word& w, std::size_t k) {
  return w.empty() ? "(empty)" : format_word(w, k);
}

inline Json header(const std::string& command) {
  Json j;
  j["schema_version"] = report_schema_version;
  j["command"] = command;
  return j;
}

inline int check(const RunConfig& cfg, const Dfa& dfa, std::ostream& out) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letters();
  const bool sync = is_synchronizing(dfa);
  const bool strong = is_strongly_connected(dfa);
  std::optional<Word> exact;
  bool exact_run = n <= std::min(cfg.limit, max_exact_limit);
  if (exact_run) exact = shortest_reset_word(dfa, cfg.limit);
  const auto greedy = greedy_reset_word(dfa);
  std::optional<BoundVerdict> verdict;
  if (exact_run) verdict = bound_check(dfa, cfg.limit);
  const bool exceeds = verdict && !verdict->within_bound;

  if (cfg.json) {
    Json j = header("check");
    j["automaton"] = to_json(dfa);
    j["strongly_connected"] = strong;
    j["synchronizing"] = sync;
    j["exact_search"] = exact_run;
    j["reset_word"] = exact ? Json(format_word(*exact, k)) : Json(nullptr);
    j["reset_length"] = exact ? Json(exact->size()) : Json(nullptr);
    j["greedy_word"] = greedy ? Json(format_word(*greedy, k)) : Json(nullptr);
    j["greedy_length"] = greedy ? Json(greedy->size()) : Json(nullptr);
    j["cerny_bound"] = (n - 1) * (n - 1);
    j["cubic_bound"] = (n * n * n - n) / 6;
    j["bound_verdict"] = verdict ? to_json(*verdict) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "automaton: n=" << n << " k=" << k << '\n';
    out << "strongly connected: " << yes_no(strong) << '\n';
    out << "synchronizing: " << yes_no(sync) << '\n';
    if (!exact_run) {
      out << "exact search skipped: n exceeds --limit " << cfg.limit << '\n';
    } else if (exact) {
      out << "shortest reset word: " << word_text(*exact, k) << " (length " << exact->size()
          << ")\n";
    }
    if (greedy) {
      out << "greedy reset word: " << word_text(*greedy, k) << " (length " << greedy->size()
          << ")\n";
    }
    out << "reference bounds: (n-1)^2 = " << (n - 1) * (n - 1)
        << ", (n^3-n)/6 = " << (n * n * n - n) / 6 << '\n';
    if (verdict && sync) out << "verdict: " << to_json(*verdict)["verdict"].get<std::string>() << '\n';
  }
  return exceeds ? flagged : completed;
}

inline int matrix(const RunConfig& cfg, const Dfa& dfa, std::ostream& out) {
  if (cfg.dot) {
    write_dot(out, dfa);
    return completed;
  }
  const Word u = parse_word(cfg.word.value_or(""), dfa.letters());
  const auto m = matrix_of_word(dfa, u);
  const auto cols = nonzero_columns(m);
  if (cfg.json) {
    Json j = header("matrix");
    j["word"] = format_word(u, dfa.letters());
    j["matrix"] = to_compact(m);
    j["nonzero_columns"] = cols.members();
    j["rank"] = rank(m);
    j["synchronizing"] = rank(m) == 1;
    out << j.dump(2) << '\n';
  } else {
    out << "word: " << word_text(u, dfa.letters()) << '\n';
    out << to_grid(m);
    out << "compact: " << to_compact(m) << '\n';
    out << "R(u) = " << ::cerny::detail::describe(cols) << ", rank " << rank(m) << '\n';
  }
  return completed;
}

inline Word word_or_shortest(const RunConfig& cfg, const Dfa& dfa) {
  if (cfg.word) return parse_word(*cfg.word, dfa.letters());
  auto s = shortest_reset_word(dfa, cfg.limit, cfg.q);
  if (!s) throw DomainError("automaton has no reset word");
  return *s;
}

inline int trace(const RunConfig& cfg, const Dfa& dfa, std::ostream& out) {
  const Word s = word_or_shortest(cfg, dfa);
  const auto t = prefix_trace(dfa, s);
  if (cfg.json) {
    Json j = header("trace");
    j["automaton"] = to_json(dfa);
    j["reset_word"] = format_word(s, dfa.letters());
    j["prefix_trace"] = to_json(t, dfa.letters(), true);
    out << j.dump(2) << '\n';
  } else {
    out << "reset word: " << word_text(s, dfa.letters()) << " (length " << s.size() << ")\n";
    out << "length  prefix  |R|  dim  matrix\n";
    for (const auto& r : t.records) {
      out << r.length << "  " << format_word(r.prefix, dfa.letters()) << "  " << r.image_size
          << "  " << r.dimension << "  " << to_compact(r.matrix) << '\n';
    }
    out << "dimension bound n(n-1)+1 = " << row_monomial_span_bound(dfa.states())
        << ", monotone: " << yes_no(t.monotone()) << '\n';
  }
  return completed;
}

inline int probe(const RunConfig& cfg, const Dfa& dfa, std::ostream& out) {
  std::optional<Word> s;
  if (cfg.word) s = parse_word(*cfg.word, dfa.letters());
  const ProbeReport r = full_probe(dfa, s, cfg.q, cfg.limit);
  const bool bad = (r.bound && !r.bound->within_bound) || !r.all_solutions_valid ||
                   !r.independent();
  if (cfg.json) {
    Json j = to_json(r);
    j["command"] = "probe";
    out << j.dump(2) << '\n';
  } else {
    const std::size_t k = dfa.letters();
    out << "reset word: " << word_text(r.reset_word, k) << " (length " << r.reset_word.size()
        << "), q = " << r.q
        << (r.q_fallback ? " (no reset word ends in state 0)" : "") << '\n';
    out << "prefixes with |R| > 1: " << r.matching.prefixes_with_rank_gt1
        << " (cells available: " << r.matching.cells.size() << ")\n";
    out << "matching: " << r.matching.matched << " of " << r.matching.candidates
        << (r.matching.full ? " (full)" : " (shortfall)") << '\n';
    for (const auto& s : r.solutions) {
      out << "  prefix " << s.prefix_length << " -> cell (" << s.cell.row << ", " << s.cell.col
          << ") L = " << to_compact(s.matrix) << (s.solves ? "" : "  NOT A SOLUTION") << '\n';
    }
    out << "independence rank: " << r.independence_rank << " (expected "
        << r.independence_expected << ")\n";
    out << "M_s outside span of L_i: " << yes_no(r.sink_outside_span) << '\n';
    out << "collapse within n(n-2) prefixes: " << yes_no(r.collapse_within_cells) << '\n';
    if (r.prefix_column)
      out << "prefixes without a unit in column q: " << r.prefix_column->counterexamples << '\n';
    if (r.bound)
      out << "bound verdict: " << to_json(*r.bound)["verdict"].get<std::string>() << '\n';
  }
  return bad ? flagged : completed;
}

inline void print_suite(const SuiteResult& s, std::ostream& out) {
  out << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.instances << " instances, "
      << s.checks << " checks, " << s.violations << " violations\n";
  for (const auto& m : s.samples) out << "  violation: " << m << '\n';
  for (const auto& [key, value] : s.measurements) out << "  " << key << " = " << value << '\n';
}

inline Json suite_json(const SuiteResult& s) {
  Json m = Json::object();
  for (const auto& [key, value] : s.measurements) m[key] = value;
  return Json{{"name", s.name},           {"instances", s.instances},
              {"checks", s.checks},       {"violations", s.violations},
              {"samples", s.samples},     {"measurements", m}};
}

inline int lemmas(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed;
  std::vector<SuiteResult> suites;
  suites.push_back(image_suite(10000, seed + 1));
  suites.push_back(coefficient_sum_suite(10000, seed + 2));
  suites.push_back(vij_span_suite(6, 1000, 4, 5, seed + 3));
  suites.push_back(sink_equation_suite(1000, seed + 4, cfg.q.value_or(0)));
  suites.push_back(prefix_trace_suite(1000, seed + 5));
  suites.push_back(span_readings(5));
  const bool ok = std::all_of(suites.begin(), suites.end(),
                              [](const SuiteResult& s) { return s.passed(); });
  if (cfg.json) {
    Json j = header("lemmas");
    j["seed"] = seed;
    Json arr = Json::array();
    for (const auto& s : suites) arr.push_back(suite_json(s));
    j["suites"] = arr;
    j["all_passed"] = ok;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& s : suites) print_suite(s, out);
  }
  return ok ? completed : flagged;
}

inline int gen(const RunConfig& cfg, std::ostream& out) {
  Dfa dfa = [&] {
    if (cfg.generator == "cerny") return cerny_automaton(cfg.n);
    if (cfg.generator == "random") {
      if (cfg.n == 0 || cfg.k == 0) throw std::invalid_argument("random needs --n and --k >= 1");
      return random_dfa(cfg.n, cfg.k, cfg.seed);
    }
    throw std::invalid_argument("unknown generator '" + cfg.generator +
                                "' (expected cerny or random)");
  }();
  if (cfg.dot) {
    write_dot(out, dfa);
  } else {
    write_dfa(out, dfa);
  }
  return completed;
}

struct EnumTally {
  std::uint64_t total = 0;
  std::uint64_t synchronizing = 0;
  std::uint64_t strongly_connected_sync = 0;
  std::uint64_t exceeds = 0;
  std::size_t max_length = 0;
  std::map<std::size_t, std::uint64_t> histogram;
  std::optional<std::uint64_t> first_extremal;  // enumeration index attaining max_length
  std::optional<std::uint64_t> first_exceeding;

  void add(const EnumTally& o) {
    total += o.total;
    synchronizing += o.synchronizing;
    strongly_connected_sync += o.strongly_connected_sync;
    exceeds += o.exceeds;
    for (const auto& [len, c] : o.histogram) histogram[len] += c;
    if (o.synchronizing > 0 &&
        (o.max_length > max_length || (o.max_length == max_length && !first_extremal))) {
      max_length = o.max_length;
      first_extremal = o.first_extremal;
    }
    if (!first_exceeding) first_exceeding = o.first_exceeding;
  }
};

/// Exact reset lengths over every table with indices in [begin, end).
inline EnumTally enumerate_range(const DfaEnumerator& e, std::uint64_t begin, std::uint64_t end,
                                 std::size_t limit) {
  EnumTally t;
  for (std::uint64_t i = begin; i < end; ++i) {
    const Dfa dfa = e.at(i);
    ++t.total;
    const auto w = shortest_reset_word(dfa, limit);
    if (!w) continue;
    ++t.synchronizing;
    if (is_strongly_connected(dfa)) ++t.strongly_connected_sync;
    ++t.histogram[w->size()];
    if (!t.first_extremal || w->size() > t.max_length) {
      t.max_length = w->size();
      t.first_extremal = i;
    }
    const std::size_t n = dfa.states();
    if (w->size() > (n - 1) * (n - 1)) {
      ++t.exceeds;
      if (!t.first_exceeding) t.first_exceeding = i;
    }
  }
  return t;
}

/// Shards the stream into contiguous index ranges, one per worker, and
/// merges the tallies in range order.
inline EnumTally enumerate_all(std::size_t n, std::size_t k, std::uint64_t budget,
                               std::size_t jobs, std::size_t limit) {
  const DfaEnumerator e(n, k, budget);
  jobs = std::max<std::size_t>(1, jobs);
  const std::uint64_t total = e.size();
  std::vector<EnumTally> parts(jobs);
  std::vector<std::thread> workers;
  for (std::size_t j = 0; j < jobs; ++j) {
    const std::uint64_t begin = total * j / jobs;
    const std::uint64_t end = total * (j + 1) / jobs;
    if (jobs == 1) {
      parts[j] = enumerate_range(e, begin, end, limit);
    } else {
      workers.emplace_back([&, j, begin, end] { parts[j] = enumerate_range(e, begin, end, limit); });
    }
  }
  for (auto& w : workers) w.join();
  EnumTally all;
  for (const auto& p : parts) all.add(p);
  return all;
}

inline int enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n == 0 || cfg.k == 0) throw std::invalid_argument("enum needs --n and --k >= 1");
  const EnumTally t = enumerate_all(cfg.n, cfg.k, cfg.budget, cfg.jobs, cfg.limit);
  const std::size_t n = cfg.n;
  if (cfg.json) {
    Json j = header("enum");
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["tables"] = t.total;
    j["filter"] = cfg.filter_sync ? "sync" : "none";
    j["synchronizing"] = t.synchronizing;
    j["strongly_connected_synchronizing"] = t.strongly_connected_sync;
    j["max_reset_length"] = t.synchronizing ? Json(t.max_length) : Json(nullptr);
    j["first_extremal_index"] = t.first_extremal ? Json(*t.first_extremal) : Json(nullptr);
    if (t.first_extremal) j["first_extremal"] = to_json(DfaEnumerator(n, cfg.k, cfg.budget).at(*t.first_extremal));
    Json hist = Json::object();
    for (const auto& [len, c] : t.histogram) hist[std::to_string(len)] = c;
    j["length_histogram"] = hist;
    j["cerny_bound"] = (n - 1) * (n - 1);
    j["exceeds_bound"] = t.exceeds;
    j["bound_verdict"] = t.exceeds ? "exceeds-bound" : "within-bound";
    out << j.dump(2) << '\n';
  } else {
    out << "tables: " << t.total << " (n=" << n << ", k=" << cfg.k << ")\n";
    out << "synchronizing: " << t.synchronizing << " (strongly connected: "
        << t.strongly_connected_sync << ")\n";
    if (!cfg.filter_sync) out << "non-synchronizing: " << t.total - t.synchronizing << '\n';
    if (t.synchronizing) out << "max minimal reset length: " << t.max_length << '\n';
    out << "length histogram:";
    for (const auto& [len, c] : t.histogram) out << ' ' << len << ':' << c;
    out << '\n';
    out << "bound (n-1)^2 = " << (n - 1) * (n - 1) << ", exceeding: " << t.exceeds << '\n';
  }
  return t.exceeds ? flagged : completed;
}

}  // namespace detail

/// Dispatches one subcommand. Report text goes to `out` (or to
/// cfg.output when set); diagnostics go to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return usage_error;
    }
    sink = &file;
  }
  try {
    const std::string& c = cfg.subcommand;
    if (c == "check") return detail::check(cfg, detail::load_input(cfg, in), *sink);
    if (c == "matrix") return detail::matrix(cfg, detail::load_input(cfg, in), *sink);
    if (c == "trace") return detail::trace(cfg, detail::load_input(cfg, in), *sink);
    if (c == "probe") return detail::probe(cfg, detail::load_input(cfg, in), *sink);
    if (c == "lemmas") return detail::lemmas(cfg, *sink);
    if (c == "gen") return detail::gen(cfg, *sink);
    if (c == "enum") return detail::enumerate(cfg, *sink);
    err << "error: unknown subcommand '" << c << "'\n";
    return usage_error;
  } catch (const ParseError& e) {
    err << "parse error: " << cfg.input << ": " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "capacity error (" << e.parameter() << "): " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return usage_error;
}

}  // namespace cerny::cli
