#pragma once

#include <cerny/automaton.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace cerny {

inline constexpr std::size_t default_exact_limit = 24;
inline constexpr std::size_t max_exact_limit = 64;

namespace detail {

using Subset = std::uint64_t;

inline Subset full_subset(std::size_t n) noexcept {
  return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

/// Per-letter image of a subset bitmask.
class SubsetStepper {
public:
  explicit SubsetStepper(const Dfa& dfa) : dfa_(dfa) {}

  Subset step(Subset s, Letter a) const noexcept {
    Subset out = 0;
    const auto row = dfa_.row(a);
    while (s != 0) {
      const int p = std::countr_zero(s);
      out |= Subset{1} << row[static_cast<std::size_t>(p)];
      s &= s - 1;
    }
    return out;
  }

private:
  const Dfa& dfa_;
};

}  // namespace detail

/// Shortest reset word by breadth-first search over the subset automaton,
/// starting from the full state set. Among shortest words the
/// lexicographically least letter sequence is returned: the queue holds each
/// level in lexicographic order of the discovering words and letters are
/// tried in increasing order, so the first singleton discovered wins.
///
/// With `target` set, only words synchronizing to that state qualify.
///
/// Returns nullopt iff no such word exists. Throws CapacityError when n
/// exceeds `limit` (use greedy_reset_word instead).
inline std::optional<Word> shortest_reset_word(const Dfa& dfa,
                                               std::size_t limit = default_exact_limit,
                                               std::optional<State> target = std::nullopt) {
  const std::size_t n = dfa.states();
  limit = std::min(limit, max_exact_limit);
  if (n > limit) {
    throw CapacityError("limit", "exact search supports at most " + std::to_string(limit) +
                                     " states (automaton has " + std::to_string(n) +
                                     "); raise --limit or use greedy_reset_word");
  }
  if (target && *target >= n) throw DomainError("target state outside the state range");
  if (n == 1) return Word{};

  using detail::Subset;
  struct Parent {
    Subset from;
    Letter letter;
  };
  const detail::SubsetStepper stepper(dfa);
  const Subset start = detail::full_subset(n);
  auto accepts = [&target](Subset t) {
    return target ? t == (Subset{1} << *target) : std::has_single_bit(t);
  };

  std::unordered_map<Subset, Parent> parent;
  parent.emplace(start, Parent{start, 0});
  std::vector<Subset> level{start};

  auto rebuild = [&](Subset end) {
    std::vector<Letter> letters;
    for (Subset cur = end; cur != start;) {
      const Parent& p = parent.at(cur);
      letters.push_back(p.letter);
      cur = p.from;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
  };

  while (!level.empty()) {
    std::vector<Subset> next_level;
    for (Subset s : level) {
      for (Letter a = 0; a < dfa.letters(); ++a) {
        const Subset t = stepper.step(s, a);
        if (!parent.emplace(t, Parent{s, a}).second) continue;
        if (accepts(t)) return rebuild(t);
        next_level.push_back(t);
      }
    }
    level = std::move(next_level);
  }
  return std::nullopt;
}

/// Greedy pair-merging reset word: repeatedly pick the pair of the current
/// image with the shortest merging word (ties by lowest state indices) and
/// apply that word. Not minimal in general.
inline std::optional<Word> greedy_reset_word(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  if (n == 1) return Word{};
  const PairMergeTable merge(dfa);
  if (!merge.all_mergeable()) return std::nullopt;

  Word result;
  std::vector<State> current(n);
  for (State p = 0; p < n; ++p) current[p] = p;

  while (current.size() > 1) {
    State best_p = current[0], best_q = current[1];
    std::size_t best = PairMergeTable::unreachable;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const std::size_t d = merge.distance(current[i], current[j]);
        if (d < best) {
          best = d;
          best_p = current[i];
          best_q = current[j];
        }
      }
    }
    Word piece;
    for (State p = best_p, q = best_q; p != q;) {
      const Letter a = merge.step(p, q);
      piece.push_back(a);
      p = dfa.next(p, a);
      q = dfa.next(q, a);
    }
    for (State& p : current) p = dfa.image(p, piece);
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    result.append(piece);
  }
  return result;
}

}  // namespace cerny
