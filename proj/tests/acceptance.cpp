// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cerny/cli.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

using namespace cerny;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
}

std::string timing(double s, double limit) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s (limit " << limit << "s)";
  return out.str();
}

std::string suite_line(const SuiteResult& s) {
  std::string out = s.name + " " + std::to_string(s.instances) + " instances, " +
                    std::to_string(s.checks) + " checks, " + std::to_string(s.violations) +
                    " violations";
  if (!s.samples.empty()) out += "; first: " + s.samples.front();
  return out;
}

void criterion_cerny_family() {
  const auto start = Clock::now();
  bool ok = true;
  std::string lengths;
  for (std::size_t n = 3; n <= 8; ++n) {
    cli::RunConfig cfg;
    cfg.subcommand = "check";
    cfg.input = "-";
    cfg.json = true;
    std::istringstream in(to_text(cerny_automaton(n)));
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err, in);
    const auto j = Json::parse(out.str());
    const bool good = code == cli::completed && j["reset_length"] == (n - 1) * (n - 1);
    ok = ok && good;
    lengths += " n=" + std::to_string(n) + ":" + j["reset_length"].dump();
  }
  const double t = seconds_since(start);
  ok = ok && t < 10.0;
  report(1, ok, "Cerny automata lengths" + lengths + ", " + timing(t, 10));
}

void criterion_enumeration(int id, std::size_t n, double limit) {
  const auto start = Clock::now();
  const auto tally = cli::detail::enumerate_all(n, 2, default_enumeration_budget, 1,
                                                default_exact_limit);
  const double t = seconds_since(start);
  const std::size_t bound = (n - 1) * (n - 1);
  const std::size_t longest = tally.histogram.empty() ? 0 : tally.histogram.rbegin()->first;
  std::uint64_t expected_tables = 1;
  for (std::size_t i = 0; i < n * 2; ++i) expected_tables *= n;
  const bool ok = tally.total == expected_tables && longest <= bound &&
                  tally.max_length == bound && tally.exceeds == 0 && t < limit;
  report(id, ok,
         "n=" + std::to_string(n) + " k=2: " + std::to_string(tally.total) + " tables, " +
             std::to_string(tally.synchronizing) + " synchronizing, max length " +
             std::to_string(tally.max_length) + " (bound " + std::to_string(bound) + "), " +
             timing(t, limit));
}

void criterion_suite(int id, const SuiteResult& s, double t, double limit = 0) {
  bool ok = s.passed();
  std::string detail = suite_line(s);
  if (limit > 0) {
    ok = ok && t < limit;
    detail += ", " + timing(t, limit);
  }
  report(id, ok, detail);
}

void criterion_probe() {
  std::size_t runs = 0;
  std::size_t full = 0;
  std::size_t column_misses = 0;
  std::size_t words_with_misses = 0;
  std::size_t failures_here = 0;
  std::string first_failure;
  auto probe_one = [&](const Dfa& dfa, const std::string& name) {
    ++runs;
    std::string problem;
    try {
      const ProbeReport r = full_probe(dfa);
      const ProbeReport again = full_probe(dfa);
      std::vector<RowMonomialMatrix> set;
      bool solved = r.all_solutions_valid;
      for (const auto& s : r.solutions) {
        solved = solved && is_solution(matrix_of_word(dfa, r.reset_word.prefix(s.prefix_length)),
                                       s.matrix, r.q);
        set.push_back(s.matrix);
      }
      set.push_back(sink_matrix(dfa.states(), r.q));
      const bool rank_ok = exact_rank(set) == r.independence_rank && r.independent();
      const bool same = to_json(r).dump(2) == to_json(again).dump(2);
      if (!solved) problem = "a chosen L_i does not solve its equation";
      else if (!rank_ok) problem = "independence rank re-check failed";
      else if (!same) problem = "JSON differs between runs";
      if (r.matching.full) ++full;
      if (r.prefix_column) {
        column_misses += r.prefix_column->counterexamples;
        if (r.prefix_column->counterexamples > 0) ++words_with_misses;
      }
    } catch (const std::exception& e) {
      problem = std::string("did not complete: ") + e.what();
    }
    if (!problem.empty()) {
      ++failures_here;
      if (first_failure.empty()) first_failure = name + ": " + problem;
    }
  };

  const DfaEnumerator all3(3, 2);
  for (std::uint64_t i = 0; i < all3.size(); ++i) {
    const Dfa d = all3.at(i);
    if (is_synchronizing(d)) probe_one(d, "n=3 table " + std::to_string(i));
  }
  for (std::size_t n = 2; n <= 6; ++n) probe_one(cerny_automaton(n), "C_" + std::to_string(n));

  std::string detail = std::to_string(runs) + " probes, " + std::to_string(failures_here) +
                       " failures; matching success " + std::to_string(full) + "/" +
                       std::to_string(runs) + "; prefixes without a unit in column q: " +
                       std::to_string(column_misses) + " (in " + std::to_string(words_with_misses) +
                       " words, reported only)";
  if (!first_failure.empty()) detail += "; first: " + first_failure;
  report(8, failures_here == 0, detail);
}

}  // namespace

int main() {
  criterion_cerny_family();
  criterion_enumeration(2, 3, 5.0);
  criterion_enumeration(3, 4, 300.0);

  auto timed = [](auto&& f) {
    const auto start = Clock::now();
    SuiteResult s = f();
    return std::pair{s, seconds_since(start)};
  };
  {
    auto [s, t] = timed([] { return image_suite(10000, 1); });
    criterion_suite(4, s, t);
  }
  {
    auto [s, t] = timed([] { return coefficient_sum_suite(10000, 2); });
    criterion_suite(5, s, t);
  }
  {
    auto [s, t] = timed([] { return vij_span_suite(6, 1000, 4, 5, 3); });
    criterion_suite(6, s, t, 60.0);
  }
  {
    auto [s, t] = timed([] { return sink_equation_suite(1000, 4, 0); });
    criterion_suite(7, s, t);
  }
  criterion_probe();
  {
    auto [s, t] = timed([] { return prefix_trace_suite(1000, 5, 6); });
    criterion_suite(9, s, t);
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
