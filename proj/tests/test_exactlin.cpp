#include <catch2/catch.hpp>

#include "oracles.hpp"

#include <cerny/exactlin.hpp>
#include <cerny/suites.hpp>

#include <random>

using namespace cerny;

namespace {

std::vector<oracle::Dense> dense_all(const std::vector<RowMonomialMatrix>& set) {
  std::vector<oracle::Dense> out;
  for (const auto& m : set) out.push_back(oracle::dense(m.targets()));
  return out;
}

std::vector<RowMonomialMatrix> all_row_monomial(std::size_t n, std::size_t columns) {
  std::vector<RowMonomialMatrix> out;
  detail::for_each_row_monomial(n, columns, [&](const RowMonomialMatrix& m) { out.push_back(m); });
  return out;
}

RowMonomialMatrix rm(std::vector<State> t) { return RowMonomialMatrix(std::move(t)); }

}  // namespace

TEST_CASE("flatten") {
  CHECK(flatten(RowMonomialMatrix::identity(2)) == IntVector{1, 0, 0, 1});
  CHECK(flatten(RowMonomialMatrix::constant(2, 0)) == IntVector{1, 0, 1, 0});
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    const auto m = detail::random_matrix(rng, 5, 5);
    BigInt sum = 0;
    for (const auto& x : flatten(m)) sum += x;
    CHECK(sum == 5);
  }
}

TEST_CASE("rational strings") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-2)) == "-2/1");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("exact_rank agrees with plain rational elimination") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t m = 1 + rng() % 20;
    std::vector<RowMonomialMatrix> set;
    for (std::size_t i = 0; i < m; ++i) set.push_back(detail::random_matrix(rng, n, n));
    CHECK(exact_rank(set) == oracle::flattened_rank(dense_all(set)));
  }
}

TEST_CASE("RationalBasis") {
  auto basis = RationalBasis::for_matrices(3);
  const auto m = rm({1, 0, 2});
  CHECK(basis.insert(m));
  CHECK(basis.dimension() == 1);
  CHECK_FALSE(basis.insert(m));
  CHECK(basis.dimension() == 1);
  CHECK(basis.contains(m));
  CHECK_FALSE(basis.contains(RowMonomialMatrix::identity(3)));
  CHECK_THROWS_AS(basis.insert(RowMonomialMatrix::identity(2)), SizeMismatch);
  CHECK(basis.insertion_log() == std::vector<bool>{true, false});

  SECTION("all 27 row monomial 3x3 matrices span dimension 7") {
    auto span = RationalBasis::for_matrices(3);
    for (const auto& x : all_row_monomial(3, 3)) span.insert(x);
    CHECK(span.dimension() == 7);
    CHECK(oracle::flattened_rank(dense_all(all_row_monomial(3, 3))) == 7);
  }

  SECTION("dimension tracks the oracle along random insertion sequences") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = 2 + rng() % 3;
      auto b = RationalBasis::for_matrices(n);
      std::vector<RowMonomialMatrix> seen;
      std::size_t increases = 0;
      for (int i = 0; i < 25; ++i) {
        const auto x = detail::random_matrix(rng, n, n);
        const bool was_in = b.contains(x);
        const bool added = b.insert(x);
        CHECK(added == !was_in);
        if (added) ++increases;
        seen.push_back(x);
        CHECK(b.dimension() == oracle::flattened_rank(dense_all(seen)));
      }
      CHECK(increases <= n * (n - 1) + 1);
      CHECK(b.vectors().size() == b.dimension());
    }
  }
}

TEST_CASE("express") {
  const auto m = rm({2, 0, 1});
  auto one = express(m, {m});
  REQUIRE(one);
  CHECK(*one == RationalCoefficients{1});
  CHECK_FALSE(express(m, {}));
  CHECK_FALSE(express(m, {RowMonomialMatrix::identity(3)}));
  CHECK_THROWS_AS(express(m, {RowMonomialMatrix::identity(2)}), SizeMismatch);

  SECTION("negative and fractional coefficients") {
    // [0,0] = [0,1] + [1,0] - [1,1]
    const std::vector<RowMonomialMatrix> set{rm({0, 1}), rm({1, 0}), rm({1, 1})};
    const auto l = express(rm({0, 0}), set);
    REQUIRE(l);
    CHECK(*l == RationalCoefficients{1, 1, -1});
    CHECK(reproduces(*l, set, rm({0, 0}), 2));
  }

  SECTION("underdetermined systems set free variables to zero") {
    const auto l = express(m, {m, m});
    REQUIRE(l);
    CHECK(*l == RationalCoefficients{1, 0});
  }

  SECTION("random instances reproduce their target exactly") {
    std::mt19937_64 rng(31);
    int solved = 0;
    for (int it = 0; it < 400; ++it) {
      const std::size_t n = 2 + rng() % 3;
      std::vector<RowMonomialMatrix> set;
      const std::size_t m_count = 1 + rng() % (n * n);
      for (std::size_t i = 0; i < m_count; ++i) set.push_back(detail::random_matrix(rng, n, n));
      const auto target = detail::random_matrix(rng, n, n);
      const auto l = express(target, set);
      auto with_target = set;
      with_target.push_back(target);
      const bool in_span = oracle::flattened_rank(dense_all(with_target)) ==
                           oracle::flattened_rank(dense_all(set));
      CHECK(l.has_value() == in_span);
      if (!l) continue;
      ++solved;
      CHECK(reproduces(*l, set, target, n));
    }
    CHECK(solved > 50);
  }
}

TEST_CASE("find_relation") {
  CHECK_FALSE(find_relation({}));
  CHECK_FALSE(find_relation({RowMonomialMatrix::identity(3)}));
  const auto m = rm({1, 1, 0});
  const auto l = find_relation({m, m});
  REQUIRE(l);
  CHECK(*l == RationalCoefficients{-1, 1});
  std::mt19937_64 rng(2);
  for (int it = 0; it < 100; ++it) {
    std::vector<RowMonomialMatrix> set;
    for (int i = 0; i < 9; ++i) set.push_back(detail::random_matrix(rng, 3, 3));
    const auto rel = find_relation(set);
    REQUIRE(rel);  // 9 > 7 = dimension bound
    CHECK(reproduces(*rel, set, std::nullopt, 3));
    CHECK(std::any_of(rel->begin(), rel->end(), [](const Rational& x) { return x != 0; }));
  }
}

TEST_CASE("check_sum_conditions") {
  const auto m = rm({0, 2, 1});
  const auto ok = check_sum_conditions({1}, {m}, m);
  CHECK(ok.holds());
  CHECK(ok.coefficient_sum == 1);
  CHECK(ok.row_sums == std::vector<Rational>(3, Rational(1)));

  const auto zero = check_sum_conditions({1, -1}, {m, m}, std::nullopt);
  CHECK(zero.holds());
  CHECK(zero.coefficient_sum == 0);
  CHECK(zero.row_sums == std::vector<Rational>(3, Rational(0)));

  // a combination that is not a row monomial matrix violates both conditions
  const auto bad = check_sum_conditions({Rational(1, 2)}, {m}, m);
  CHECK_FALSE(bad.holds());
  CHECK(bad.violations.size() == 4);
}

TEST_CASE("vij_basis") {
  CHECK_THROWS_AS(vij_basis(3, 1), DomainError);
  CHECK_THROWS_AS(vij_basis(3, 4), DomainError);

  const auto b32 = vij_basis(3, 2);
  REQUIRE(b32.size() == 4);
  CHECK(b32[0] == rm({0, 1, 1}));
  CHECK(b32[1] == rm({1, 0, 1}));
  CHECK(b32[2] == rm({1, 1, 0}));
  CHECK(b32[3] == rm({1, 1, 1}));
  CHECK(exact_rank(b32) == 4);
  CHECK(oracle::flattened_rank(dense_all(b32)) == 4);

  const auto b43 = vij_basis(4, 3);
  CHECK(b43.size() == 9);
  CHECK(exact_rank(b43) == 9);
  CHECK(oracle::flattened_rank(dense_all(b43)) == 9);

  SECTION("spans all 81 row monomial 4x3 matrices") {
    auto span = RationalBasis::for_matrices(4);
    for (const auto& m : b43) span.insert(m);
    for (const auto& t : all_row_monomial(4, 3)) CHECK(span.contains(t));
    auto with_all = b43;
    for (const auto& t : all_row_monomial(4, 3)) with_all.push_back(t);
    CHECK(oracle::flattened_rank(dense_all(with_all)) == 9);
  }
}

TEST_CASE("decompose_vij") {
  const auto basis = vij_basis(3, 2);
  CHECK(decompose_vij(rm({1, 1, 1}), 2) == RationalCoefficients{0, 0, 0, 1});
  CHECK(decompose_vij(rm({1, 0, 1}), 2) == RationalCoefficients{0, 1, 0, 0});
  CHECK(decompose_vij(rm({0, 0, 0}), 2) == RationalCoefficients{1, 1, 1, -2});
  CHECK_THROWS_AS(decompose_vij(rm({2, 0, 0}), 2), DomainError);

  for (const auto& t : all_row_monomial(3, 2)) {
    const auto l = decompose_vij(t, 2);
    CHECK(reproduces(l, basis, t, 3));
    CHECK(express(t, basis) == l);
  }
  const auto b44 = vij_basis(4, 4);
  for (const auto& t : all_row_monomial(4, 4)) CHECK(express(t, b44) == decompose_vij(t, 4));
}
