#pragma once

#include <cerny/automaton.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cerny {

/// The Černý series: letter a is the cycle p -> p+1 (mod n), letter b sends
/// 0 to 1 and fixes every other state. Shortest reset word has length (n-1)^2.
inline Dfa cerny_automaton(std::size_t n) {
  if (n < 2) throw DomainError("Cerny automaton needs n >= 2, got " + std::to_string(n));
  std::vector<std::vector<State>> table(2, std::vector<State>(n));
  for (State p = 0; p < n; ++p) {
    table[0][p] = static_cast<State>((p + 1) % n);
    table[1][p] = p;
  }
  table[1][0] = 1;
  return Dfa(std::move(table));
}

/// Independent uniform transitions. The same (n, k, seed) always yields the
/// same automaton on a given standard library.
inline Dfa random_dfa(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  std::vector<std::vector<State>> table(k, std::vector<State>(n));
  for (auto& row : table)
    for (auto& t : row) t = target(rng);
  return Dfa(std::move(table));
}

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 24;

/// n^(n*k), or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> table_count(std::size_t n, std::size_t k) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n * k; ++i) {
    if (count > UINT64_MAX / n) return std::nullopt;
    count *= n;
  }
  return count;
}

/// Every complete transition table on n states and k letters, in
/// lexicographic order of the flattened table (letter-major, first entry
/// most significant). Random access by index allows sharding.
class DfaEnumerator {
public:
  DfaEnumerator(std::size_t n, std::size_t k,
                std::uint64_t budget = default_enumeration_budget)
      : n_(n), k_(k) {
    if (n == 0 || k == 0) throw DomainError("enumeration needs n >= 1 and k >= 1");
    const auto count = table_count(n, k);
    if (!count || *count > budget) {
      throw CapacityError("budget", "enumerating n=" + std::to_string(n) + ", k=" +
                                        std::to_string(k) + " exceeds the budget of " +
                                        std::to_string(budget) + " automata");
    }
    count_ = *count;
  }

  std::uint64_t size() const noexcept { return count_; }

  Dfa at(std::uint64_t index) const {
    std::vector<std::vector<State>> table(k_, std::vector<State>(n_));
    for (std::size_t pos = n_ * k_; pos-- > 0;) {
      table[pos / n_][pos % n_] = static_cast<State>(index % n_);
      index /= n_;
    }
    return Dfa(std::move(table));
  }

  /// Sequential stream: returns nullopt after the last table.
  std::optional<Dfa> next() {
    if (cursor_ >= count_) return std::nullopt;
    return at(cursor_++);
  }

private:
  std::size_t n_;
  std::size_t k_;
  std::uint64_t count_ = 0;
  std::uint64_t cursor_ = 0;
};

}  // namespace cerny
