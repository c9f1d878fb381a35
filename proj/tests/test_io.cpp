#include <catch2/catch.hpp>

#include <cerny/automaton_io.hpp>
#include <cerny/generators.hpp>

#include <random>

using namespace cerny;

TEST_CASE("automaton text format") {
  const Dfa c4 = cerny_automaton(4);
  CHECK(to_text(c4) == "4 2\n1 2 3 0\n1 1 2 3\n");
  CHECK(parse_dfa("4 2\n1 2 3 0\n1 1 2 3\n") == c4);
  CHECK(parse_dfa("  4   2 \r\n1 2 3 0\n 1 1 2 3\n\n\n") == c4);
}

TEST_CASE("write then read reproduces the automaton") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t k = 1 + rng() % 4;
    const Dfa d = random_dfa(n, k, rng());
    CHECK(parse_dfa(to_text(d)) == d);
  }
}

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_dfa(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse errors name line and column") {
  auto e = parse_error_of("");
  CHECK(e.line() == 1);

  e = parse_error_of("3\n0 1 2\n");
  CHECK(e.line() == 1);

  e = parse_error_of("3 1\n0 x 2\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_error_of("3 1\n0 1 3\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 5);

  e = parse_error_of("3 2\n0 1 2\n");
  CHECK(e.line() == 3);

  e = parse_error_of("3 1\n0 1\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 4);

  e = parse_error_of("2 1\n0 1\n1 0\n");
  CHECK(e.line() == 3);

  e = parse_error_of("0 1\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);

  CHECK_THAT(std::string(parse_error_of("3 1\n0 -1 2\n").what()),
             Catch::Matchers::StartsWith("line 2, column 3"));
}

TEST_CASE("words render and parse") {
  CHECK(format_word(Word{1, 0, 0, 0, 1}, 2) == "baaab");
  CHECK(format_word(Word{}, 2).empty());
  CHECK(parse_word("baaab", 2) == Word{1, 0, 0, 0, 1});
  CHECK(parse_word("", 2).empty());
  CHECK_THROWS_AS(parse_word("abc", 2), InvalidWord);
  CHECK_THROWS_AS(parse_word("aB", 2), InvalidWord);

  CHECK(format_word(Word{3, 26, 0}, 30) == "3,26,0");
  CHECK(parse_word("3,26,0", 30) == Word{3, 26, 0});
  CHECK_THROWS_AS(parse_word("3,,0", 30), InvalidWord);
  CHECK_THROWS_AS(parse_word("30", 30), InvalidWord);

  std::mt19937_64 rng(1);
  for (std::size_t k : {2u, 26u, 27u, 40u}) {
    Word w;
    for (int i = 0; i < 12; ++i) w.push_back(static_cast<Letter>(rng() % k));
    CHECK(parse_word(format_word(w, k), k) == w);
  }
}

TEST_CASE("DOT export") {
  std::ostringstream out;
  write_dot(out, cerny_automaton(3));
  const std::string dot = out.str();
  CHECK_THAT(dot, Catch::Matchers::StartsWith("digraph dfa {"));
  CHECK_THAT(dot, Catch::Matchers::Contains("0 -> 1 [label=\"a,b\"];"));
  CHECK_THAT(dot, Catch::Matchers::Contains("2 -> 0 [label=\"a\"];"));
  CHECK_THAT(dot, Catch::Matchers::Contains("2 -> 2 [label=\"b\"];"));
  CHECK_THAT(dot, Catch::Matchers::EndsWith("}\n"));
}
