#include <catch2/catch.hpp>

#include "oracles.hpp"

#include <cerny/exactlin.hpp>
#include <cerny/generators.hpp>
#include <cerny/reset_word.hpp>
#include <cerny/rowmon.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace cerny;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
  Word w;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % k));
  return w;
}

}  // namespace

TEST_CASE("matrix_of_word") {
  const Dfa c4 = cerny_automaton(4);
  CHECK(matrix_of_word(c4, Word{}) == RowMonomialMatrix::identity(4));
  CHECK(matrix_of_word(c4, Word{0}).targets() == std::vector<State>{1, 2, 3, 0});
  CHECK_THROWS_AS(matrix_of_word(c4, Word{2}), InvalidWord);

  const auto s = shortest_reset_word(c4);
  REQUIRE(s);
  const auto ms = matrix_of_word(c4, *s);
  CHECK(rank(ms) == 1);
  CHECK(std::all_of(ms.targets().begin(), ms.targets().end(),
                    [&](State t) { return t == ms.target(0); }));
}

TEST_CASE("RowMonomialMatrix validates targets") {
  CHECK_THROWS_AS(RowMonomialMatrix(std::vector<State>{}), DomainError);
  CHECK_THROWS_AS(RowMonomialMatrix(std::vector<State>{0, 2}), DomainError);
  CHECK_THROWS_AS(RowMonomialMatrix::constant(3, 3), DomainError);
}

TEST_CASE("multiply") {
  const Dfa c4 = cerny_automaton(4);
  const auto ma = matrix_of_word(c4, Word{0});
  const auto mb = matrix_of_word(c4, Word{1});
  CHECK(multiply(RowMonomialMatrix::identity(4), mb) == mb);
  CHECK(multiply(ma, mb) == matrix_of_word(c4, Word{0, 1}));
  CHECK(multiply(ma, RowMonomialMatrix::constant(4, 2)) == RowMonomialMatrix::constant(4, 2));
  CHECK_THROWS_AS(multiply(ma, RowMonomialMatrix::identity(3)), SizeMismatch);

  SECTION("agrees with dense multiplication and with M_u M_v = M_uv") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 500; ++it) {
      const std::size_t n = 2 + rng() % 6;
      const Dfa d = random_dfa(n, 3, rng());
      const Word u = random_word(rng, 3, 6);
      const Word v = random_word(rng, 3, 6);
      const auto mu = matrix_of_word(d, u);
      const auto mv = matrix_of_word(d, v);
      const auto prod = multiply(mu, mv);
      CHECK(prod == matrix_of_word(d, u + v));
      CHECK(oracle::dense(prod.targets()) ==
            oracle::dense_product(oracle::dense(mu.targets()), oracle::dense(mv.targets())));
    }
  }
}

TEST_CASE("nonzero_columns, rank and is_permutation") {
  const Dfa c4 = cerny_automaton(4);
  CHECK(nonzero_columns(RowMonomialMatrix::identity(4)) == StateSet::full(4));
  CHECK(nonzero_columns(RowMonomialMatrix::constant(4, 0)) == StateSet(4, {0}));
  CHECK(nonzero_columns(matrix_of_word(c4, Word{1})) == StateSet(4, {1, 2, 3}));

  CHECK(rank(RowMonomialMatrix::identity(5)) == 5);
  CHECK(rank(RowMonomialMatrix::constant(5, 3)) == 1);

  CHECK(is_permutation(RowMonomialMatrix::identity(3)));
  CHECK_FALSE(is_permutation(RowMonomialMatrix::constant(3, 0)));
  for (std::size_t n = 2; n <= 7; ++n)
    CHECK(is_permutation(matrix_of_word(cerny_automaton(n), Word{0})));
}

TEST_CASE("rank equals the exact rank of the dense matrix") {
  std::mt19937_64 rng(1000);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t k = 1 + rng() % 3;
    const Dfa d = random_dfa(n, k, rng());
    const auto m = matrix_of_word(d, random_word(rng, k, 8));
    std::vector<std::vector<oracle::Rational>> rows;
    for (const auto& r : oracle::dense(m.targets())) rows.emplace_back(r.begin(), r.end());
    const std::size_t expected = oracle::rational_rank(rows);
    CHECK(rank(m) == expected);
    CHECK(matrix_rank(m) == expected);
  }
}

TEST_CASE("image and column properties of products") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = 2 + rng() % 6;
    auto table = random_dfa(n, 2, rng()).table();
    // letter 0 is a permutation, letter 1 is arbitrary
    std::iota(table[0].begin(), table[0].end(), State{0});
    std::shuffle(table[0].begin(), table[0].end(), rng);
    const Dfa d(std::move(table));
    const auto mu = matrix_of_word(d, random_word(rng, 2, 8));
    const auto mv = matrix_of_word(d, random_word(rng, 2, 8));
    const auto perm = matrix_of_word(d, Word{0});

    const auto ruv = nonzero_columns(multiply(mu, mv));
    CHECK(ruv.size() <= rank(mu));
    CHECK(ruv.subset_of(nonzero_columns(mv)));

    CHECK(column_unit_counts(multiply(perm, mu)) == column_unit_counts(mu));
    StateSet moved(n);
    for (State j : nonzero_columns(mu).members()) moved.insert(perm.target(j));
    CHECK(nonzero_columns(multiply(mu, perm)) == moved);

    // each nonzero column of M_u M_v is the sum of the columns j of M_u with v(j) = c
    const auto prod = multiply(mu, mv);
    for (State c = 0; c < n; ++c) {
      std::vector<int> merged(n, 0);
      for (State j = 0; j < n; ++j)
        if (mv.target(j) == c)
          for (State i = 0; i < n; ++i) merged[i] += mu.at(i, j);
      for (State i = 0; i < n; ++i) CHECK(merged[i] == prod.at(i, c));
    }
  }
}

TEST_CASE("rank one exactly for synchronizing words") {
  const Dfa c5 = cerny_automaton(5);
  const auto s = *shortest_reset_word(c5);
  for (std::size_t len = 0; len <= s.size(); ++len) {
    const auto m = matrix_of_word(c5, s.prefix(len));
    CHECK((rank(m) == 1) == (apply_word(c5, StateSet::full(5), s.prefix(len)).size() == 1));
    CHECK((rank(m) == 1) == (len == s.size()));
  }
}

TEST_CASE("renderings") {
  const auto m = RowMonomialMatrix(std::vector<State>{2, 0, 0});
  CHECK(to_grid(m) == "0 0 1\n1 0 0\n1 0 0\n");
  CHECK(to_compact(m) == "[2,0,0]");
}
