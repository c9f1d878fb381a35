#pragma once

#include <cerny/equation.hpp>
#include <cerny/exactlin.hpp>
#include <cerny/generators.hpp>
#include <cerny/probe.hpp>
#include <cerny/reset_word.hpp>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cerny {

// Invariant suites over exhaustive or random instances. Each suite counts
// checked instances and violations; a violation means a claimed property
// of row monomial matrices failed on a concrete instance.

struct SuiteResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;  // first few violation descriptions
  std::vector<std::pair<std::string, std::string>> measurements;

  bool passed() const noexcept { return violations == 0; }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++violations;
    if (samples.size() < 8) samples.push_back(what);
  }

  template <std::invocable F>
  void check(bool ok, F&& describe) {
    ++checks;
    if (ok) return;
    ++violations;
    if (samples.size() < 8) samples.push_back(describe());
  }

  void measure(std::string key, std::string value) {
    measurements.emplace_back(std::move(key), std::move(value));
  }
};

namespace detail {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline RowMonomialMatrix random_matrix(std::mt19937_64& rng, std::size_t n,
                                       std::size_t columns) {
  std::vector<State> t(n);
  for (auto& x : t) x = static_cast<State>(uniform(rng, 0, columns - 1));
  return RowMonomialMatrix(std::move(t));
}

inline Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
  Word w;
  const std::size_t len = uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(uniform(rng, 0, k - 1)));
  return w;
}

/// Calls f for each of the columns^n row monomial matrices whose units lie
/// in the first `columns` columns, in lexicographic target order.
template <class F>
void for_each_row_monomial(std::size_t n, std::size_t columns, F&& f) {
  std::vector<State> t(n, 0);
  while (true) {
    f(RowMonomialMatrix(t));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < columns) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

inline std::string describe(const StateSet& s) {
  std::string out = "{";
  for (State x : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

inline std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Rank equals the number of nonzero columns; |R(ua)| <= |R(u)|;
/// R(au) ⊆ R(u); for a permutation letter a, R(au) = R(u), |R(ua)| = |R(u)|,
/// column counts survive left multiplication and R(ua) = a(R(u)).
/// Every column of M_u M_a is a sum of whole columns of M_u.
inline SuiteResult image_suite(std::uint64_t count = 10000, std::uint64_t seed = 1) {
  SuiteResult res;
  res.name = "images";
  std::mt19937_64 rng(seed);
  for (std::uint64_t it = 0; it < count; ++it) {
    const std::size_t n = detail::uniform(rng, 2, 7);
    const std::size_t k = detail::uniform(rng, 1, 3);
    auto table = random_dfa(n, k, rng()).table();
    const auto a = static_cast<Letter>(detail::uniform(rng, 0, k - 1));
    if (detail::uniform(rng, 0, 2) == 0) {
      std::iota(table[a].begin(), table[a].end(), State{0});
      std::shuffle(table[a].begin(), table[a].end(), rng);
    }
    const Dfa dfa(std::move(table));
    const Word u = detail::random_word(rng, k, 10);
    ++res.instances;

    const auto mu = matrix_of_word(dfa, u);
    const auto ma = matrix_of_word(dfa, Word{a});
    const auto mua = matrix_of_word(dfa, u + Word{a});
    const auto mau = matrix_of_word(dfa, Word{a} + u);
    const auto ru = nonzero_columns(mu);
    const auto rua = nonzero_columns(mua);
    const auto rau = nonzero_columns(mau);
    const std::string where = "n=" + std::to_string(n) + " u=" + to_compact(mu);

    res.check(rank(mu) == ru.size(), [&] { return "rank != |R(u)| at " + where; });
    res.check(matrix_rank(mu) == ru.size(),
              [&] { return "exact rank != |R(u)| at " + where; });
    res.check(multiply(mu, ma) == mua, [&] { return "M_u M_a != M_ua at " + where; });
    res.check(rua.size() <= ru.size(), [&] { return "|R(ua)| > |R(u)| at " + where; });
    res.check(rau.subset_of(ru), [&] { return "R(au) not within R(u) at " + where; });
    res.check(rua.subset_of(nonzero_columns(ma)),
              [&] { return "R(ua) not within R(a) at " + where; });

    // columns of M_u M_a: column c collects the columns j of M_u with a(j) = c
    {
      bool merged_ok = true;
      for (State c = 0; c < n; ++c) {
        for (State i = 0; i < n; ++i) {
          int sum = 0;
          for (State j = 0; j < n; ++j)
            if (ma.target(j) == c) sum += mu.at(i, j);
          merged_ok = merged_ok && sum == mua.at(i, c);
        }
      }
      res.check(merged_ok, [&] { return "column merge structure broken at " + where; });
    }

    if (is_permutation(ma)) {
      res.check(rau == ru, [&] { return "permutation: R(au) != R(u) at " + where; });
      res.check(rua.size() == ru.size(),
                [&] { return "permutation: |R(ua)| != |R(u)| at " + where; });
      res.check(column_unit_counts(multiply(ma, mu)) == column_unit_counts(mu),
                [&] { return "permutation changed column counts at " + where; });
      StateSet moved(n);
      for (State j : ru.members()) moved.insert(ma.target(j));
      res.check(moved == rua, [&] {
        return "permutation: R(ua)=" + detail::describe(rua) + " != a(R(u))=" +
               detail::describe(moved) + " at " + where;
      });
    }
  }
  return res;
}

/// Expressing a row monomial matrix as Σ λ_i M_i forces Σ λ_i = 1 and all
/// row sums 1; a vanishing combination forces Σ λ_i = 0 and all row sums 0.
inline SuiteResult coefficient_sum_suite(std::uint64_t count = 10000, std::uint64_t seed = 2) {
  SuiteResult res;
  res.name = "coefficient_sums";
  std::mt19937_64 rng(seed);
  std::uint64_t nonzero = 0;
  std::uint64_t nontrivial = 0;
  while (nonzero < count) {
    const std::size_t n = detail::uniform(rng, 2, 4);
    const std::size_t bound = row_monomial_span_bound(n);
    const std::size_t m = detail::uniform(rng, 1, bound + 2);
    std::vector<RowMonomialMatrix> set;
    for (std::size_t i = 0; i < m; ++i) set.push_back(detail::random_matrix(rng, n, n));
    std::optional<RationalCoefficients> lambda;
    RowMonomialMatrix target;
    for (int attempt = 0; attempt < 8 && !lambda; ++attempt) {
      target = detail::random_matrix(rng, n, n);
      lambda = express(target, set);
    }
    if (!lambda) continue;
    ++nonzero;
    ++res.instances;
    if (std::any_of(lambda->begin(), lambda->end(),
                    [](const Rational& l) { return l != 0 && l != 1; }))
      ++nontrivial;
    res.check(reproduces(*lambda, set, target, n),
              [&] { return "express residual nonzero for " + to_compact(target); });
    const auto v = check_sum_conditions(*lambda, set, target);
    res.check(v.holds(), [&] { return "nonzero target: " + v.violations.front(); });
  }

  for (std::uint64_t it = 0; it < count; ++it) {
    const std::size_t n = detail::uniform(rng, 2, 4);
    const std::size_t m = row_monomial_span_bound(n) + detail::uniform(rng, 1, 3);
    std::vector<RowMonomialMatrix> set;
    for (std::size_t i = 0; i < m; ++i) set.push_back(detail::random_matrix(rng, n, n));
    const auto lambda = find_relation(set);
    ++res.instances;
    res.check(lambda.has_value(), "more matrices than n(n-1)+1 yet no relation found");
    if (!lambda) continue;
    res.check(reproduces(*lambda, set, std::nullopt, n), "relation does not vanish");
    const auto v = check_sum_conditions(*lambda, set, std::nullopt);
    res.check(v.holds(), [&] { return "zero target: " + v.violations.front(); });
  }
  res.measure("nonzero_instances", std::to_string(nonzero));
  res.measure("nonzero_instances_with_fractional_or_negative_lambda", std::to_string(nontrivial));
  return res;
}

/// V(i,j) and K: rank n(k-1)+1, every member needed, and every n x k row
/// monomial matrix decomposes as Σ V(i,j) - (m-1)K. The span of all n x n
/// row monomial matrices has dimension n(n-1)+1.
inline SuiteResult vij_span_suite(std::size_t max_n = 6, std::size_t samples = 1000,
                                std::size_t exhaustive_up_to = 4, std::size_t span_up_to = 5,
                                std::uint64_t seed = 3) {
  SuiteResult res;
  res.name = "vij_span";
  std::mt19937_64 rng(seed);
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      const auto basis = vij_basis(n, k);
      const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const std::size_t expected = n * (k - 1) + 1;
      res.check(basis.size() == expected, "basis size " + where);
      const std::size_t r = exact_rank(basis);
      res.check(r == expected, "rank " + std::to_string(r) + " != n(k-1)+1 at " + where);
      if (k == n - 1) {
        res.check(r == (n - 1) * (n - 1), "k=n-1 rank != (n-1)^2 at " + where);
      }
      for (std::size_t drop = 0; drop < basis.size(); ++drop) {
        auto rest = basis;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        res.check(exact_rank(rest) == expected - 1,
                  "leave-one-out rank did not drop at " + where);
      }

      auto verify = [&](const RowMonomialMatrix& t, bool cross_check) {
        ++res.instances;
        const auto lambda = decompose_vij(t, k);
        res.check(reproduces(lambda, basis, t, n), "decomposition of " + to_compact(t));
        if (cross_check) {
          const auto solved = express(t, basis);
          res.check(solved && *solved == lambda,
                    "express disagrees with decomposition for " + to_compact(t));
        }
      };
      if (n <= exhaustive_up_to) {
        detail::for_each_row_monomial(n, k, [&](const RowMonomialMatrix& t) { verify(t, true); });
      } else {
        for (std::size_t s = 0; s < samples; ++s)
          verify(detail::random_matrix(rng, n, k), s < 20);
      }
    }
  }

  for (std::size_t n = 1; n <= span_up_to; ++n) {
    auto span = RationalBasis::for_matrices(n);
    std::size_t increases = 0;
    detail::for_each_row_monomial(n, n, [&](const RowMonomialMatrix& m) {
      if (span.insert(m)) ++increases;
    });
    const std::size_t bound = row_monomial_span_bound(n);
    res.check(span.dimension() == bound, "span dimension " + std::to_string(span.dimension()) +
                                             " != n(n-1)+1 at n=" + std::to_string(n));
    res.check(increases <= bound, "subspace chain longer than n(n-1)+1");
    res.measure("span_dimension_n" + std::to_string(n), std::to_string(span.dimension()));
  }
  return res;
}

/// Measured dimensions for readings of the bounds on matrices with two
/// nonzero columns (claimed n+1) and with a common nonzero column (claimed
/// n). Reported, not asserted.
inline SuiteResult span_readings(std::size_t max_n = 5) {
  SuiteResult res;
  res.name = "span_readings";
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::string tag = "_n" + std::to_string(n);
    auto two_cols = RationalBasis::for_matrices(n);
    detail::for_each_row_monomial(n, 2, [&](const RowMonomialMatrix& m) { two_cols.insert(m); });
    res.measure("units_within_two_fixed_columns" + tag, std::to_string(two_cols.dimension()));

    auto rank_one = RationalBasis::for_matrices(n);
    for (State c = 0; c < n; ++c) rank_one.insert(RowMonomialMatrix::constant(n, c));
    res.measure("all_units_in_one_column" + tag, std::to_string(rank_one.dimension()));

    auto containing = RationalBasis::for_matrices(n);
    detail::for_each_row_monomial(n, n, [&](const RowMonomialMatrix& m) {
      if (column_unit_counts(m)[0] > 0) containing.insert(m);
    });
    res.measure("column_0_nonzero" + tag, std::to_string(containing.dimension()));
    ++res.instances;
  }
  return res;
}

/// M_u L = M_s: n^(n-|R(u)|) solutions, (n-1)^(n-|R(u)|) minimal ones, every
/// minimal L below every solution in ⊑_q, every enumerated L a solution.
/// For n <= exhaustive_check_up_to the enumeration is compared against a
/// filter over all n^n row monomial matrices.
inline SuiteResult sink_equation_suite(std::size_t random_per_n = 1000, std::uint64_t seed = 4,
                                State q = 0, std::size_t exhaustive_check_up_to = 3) {
  SuiteResult res;
  res.name = "sink_equation";
  std::mt19937_64 rng(seed);
  auto check_one = [&](const RowMonomialMatrix& mu) {
    ++res.instances;
    const std::size_t n = mu.size();
    const std::size_t free = n - rank(mu);
    const std::string where = "M_u=" + to_compact(mu);
    const auto all = enumerate_solutions(mu, q, SolutionEnumerator::all_columns(n));
    const auto minimal = enumerate_solutions(mu, q, SolutionEnumerator::columns_except(n, q));
    res.check(all.size() == detail::ipow(n, free), "solution count at " + where);
    res.check(minimal.size() == detail::ipow(n - 1, free), "minimal count at " + where);
    const auto sink = sink_matrix(n, q);
    for (const auto& l : all) {
      res.check(multiply(mu, l) == sink && is_solution(mu, l, q),
                [&] { return to_compact(l) + " does not solve " + where; });
    }
    for (const auto& l : minimal) {
      res.check(is_minimal_solution(mu, l, q), [&] { return "not minimal at " + where; });
      bool below_all = true;
      for (const auto& other : all) below_all = below_all && leq_q(l, other, q);
      res.check(below_all, [&] { return to_compact(l) + " not below every solution at " + where; });
    }
    const auto canonical = minimal_solution(mu, q);
    res.check(is_minimal_solution(mu, canonical, q), "minimal_solution not minimal at " + where);
    if (n <= exhaustive_check_up_to) {
      std::vector<RowMonomialMatrix> filtered;
      detail::for_each_row_monomial(n, n, [&](const RowMonomialMatrix& l) {
        if (multiply(mu, l) == sink) filtered.push_back(l);
      });
      res.check(filtered == all, "enumeration incomplete at " + where);
    }
  };

  detail::for_each_row_monomial(3, 3, check_one);
  for (std::size_t n : {4u, 5u})
    for (std::size_t i = 0; i < random_per_n; ++i) check_one(detail::random_matrix(rng, n, n));
  return res;
}

/// Prefix traces of shortest reset words of random synchronizing automata:
/// image sizes never grow, dimensions never shrink and stay within n(n-1)+1.
inline SuiteResult prefix_trace_suite(std::uint64_t count = 1000, std::uint64_t seed = 5,
                                      std::size_t max_n = 6) {
  SuiteResult res;
  res.name = "prefix_trace";
  std::mt19937_64 rng(seed);
  while (res.instances < count) {
    const std::size_t n = detail::uniform(rng, 2, max_n);
    const std::size_t k = detail::uniform(rng, 2, 3);
    const Dfa dfa = random_dfa(n, k, rng());
    const auto s = shortest_reset_word(dfa);
    if (!s) continue;
    ++res.instances;
    const auto trace = prefix_trace(dfa, *s);
    res.check(trace.monotone(), [&] { return "trace not monotone, n=" + std::to_string(n); });
    res.check(!trace.records.empty() && trace.records.back().image_size == 1,
              "last prefix not synchronizing");
  }
  return res;
}

}  // namespace cerny
