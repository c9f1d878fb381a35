#pragma once

#include <cerny/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cerny {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Finite sequence of letter indices. The empty word is the identity mapping.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter a) { letters_.push_back(a); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  /// First `len` letters.
  Word prefix(std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin(),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// Subset of the state range [0, n).
class StateSet {
public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : bits_(universe, false) {}
  StateSet(std::size_t universe, std::initializer_list<State> members) : bits_(universe, false) {
    for (State s : members) insert(s);
  }

  static StateSet full(std::size_t universe) {
    StateSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }

  void insert(State s) {
    if (s >= bits_.size()) {
      throw DomainError("state " + std::to_string(s) + " outside [0, " +
                        std::to_string(bits_.size()) + ")");
    }
    bits_[s] = true;
  }

  bool contains(State s) const noexcept { return s < bits_.size() && bits_[s]; }

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }
  bool empty() const noexcept { return size() == 0; }

  std::vector<State> members() const {
    std::vector<State> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<State>(i));
    return out;
  }

  /// True iff every member of this set is a member of `other`.
  bool subset_of(const StateSet& other) const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.contains(static_cast<State>(i))) return false;
    return true;
  }

  friend bool operator==(const StateSet&, const StateSet&) = default;

private:
  std::vector<bool> bits_;
};

/// `table[a][p]` is the successor of state p under letter a.
using TransitionTable = std::vector<std::vector<State>>;

/// Complete deterministic automaton on states [0, n) over letters [0, k).
/// State 0 plays the role of the distinguished target state.
class Dfa {
public:
  explicit Dfa(TransitionTable table) {
    if (table.empty()) throw DomainError("automaton needs at least one letter");
    k_ = table.size();
    n_ = table.front().size();
    if (n_ == 0) throw DomainError("automaton needs at least one state");
    delta_.reserve(n_ * k_);
    for (std::size_t a = 0; a < k_; ++a) {
      if (table[a].size() != n_) {
        throw DomainError("letter " + std::to_string(a) + " has " +
                          std::to_string(table[a].size()) + " targets, expected " +
                          std::to_string(n_));
      }
      for (State t : table[a]) {
        if (t >= n_) {
          throw DomainError("target " + std::to_string(t) + " outside [0, " +
                            std::to_string(n_) + ")");
        }
        delta_.push_back(t);
      }
    }
  }

  std::size_t states() const noexcept { return n_; }
  std::size_t letters() const noexcept { return k_; }

  State next(State p, Letter a) const noexcept { return delta_[a * n_ + p]; }

  /// Targets of letter `a` for states 0..n-1.
  std::span<const State> row(Letter a) const noexcept {
    return {delta_.data() + a * n_, n_};
  }

  TransitionTable table() const {
    TransitionTable out(k_);
    for (std::size_t a = 0; a < k_; ++a) out[a].assign(row(a).begin(), row(a).end());
    return out;
  }

  void check_word(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= k_) {
        throw InvalidWord("letter index " + std::to_string(w[i]) + " at position " +
                          std::to_string(i) + " outside alphabet of size " +
                          std::to_string(k_));
      }
    }
  }

  /// Image of a single state; the word must already be valid.
  State image(State p, const Word& w) const noexcept {
    for (Letter a : w) p = next(p, a);
    return p;
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<State> delta_;
};

inline StateSet apply_word(const Dfa& dfa, const StateSet& set, const Word& w) {
  if (set.universe() != dfa.states()) {
    throw SizeMismatch("state set universe " + std::to_string(set.universe()) +
                       " differs from automaton size " + std::to_string(dfa.states()));
  }
  dfa.check_word(w);
  StateSet out(dfa.states());
  for (State p : set.members()) out.insert(dfa.image(p, w));
  return out;
}

namespace detail {

inline std::size_t pair_index(State p, State q, std::size_t n) noexcept {
  if (p > q) std::swap(p, q);
  return static_cast<std::size_t>(p) * n + q;
}

}  // namespace detail

/// Shortest merging words for every unordered state pair, computed by a
/// backward breadth-first search over the pair automaton from the diagonal.
class PairMergeTable {
public:
  static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

  explicit PairMergeTable(const Dfa& dfa) : n_(dfa.states()) {
    const std::size_t n = n_;
    const std::size_t k = dfa.letters();
    distance_.assign(n * n, unreachable);
    step_.assign(n * n, 0);

    // preimages[a][t] = states p with p.a = t
    std::vector<std::vector<std::vector<State>>> preimages(
        k, std::vector<std::vector<State>>(n));
    for (Letter a = 0; a < k; ++a)
      for (State p = 0; p < n; ++p) preimages[a][dfa.next(p, a)].push_back(p);

    std::queue<std::pair<State, State>> frontier;
    for (State p = 0; p < n; ++p) {
      distance_[detail::pair_index(p, p, n)] = 0;
      frontier.emplace(p, p);
    }
    while (!frontier.empty()) {
      auto [x, y] = frontier.front();
      frontier.pop();
      const std::size_t d = distance_[detail::pair_index(x, y, n)];
      for (Letter a = 0; a < k; ++a) {
        for (State p : preimages[a][x]) {
          for (State q : preimages[a][y]) {
            if (p == q) continue;
            const std::size_t idx = detail::pair_index(p, q, n);
            if (distance_[idx] != unreachable) continue;
            distance_[idx] = d + 1;
            step_[idx] = a;
            frontier.emplace(p, q);
          }
        }
      }
    }
  }

  std::size_t distance(State p, State q) const noexcept {
    return distance_[detail::pair_index(p, q, n_)];
  }

  /// First letter of a shortest word merging p and q (p != q, mergeable).
  Letter step(State p, State q) const noexcept { return step_[detail::pair_index(p, q, n_)]; }

  bool all_mergeable() const noexcept {
    for (State p = 0; p < n_; ++p)
      for (State q = p + 1; q < n_; ++q)
        if (distance(p, q) == unreachable) return false;
    return true;
  }

private:
  std::size_t n_;
  std::vector<std::size_t> distance_;
  std::vector<Letter> step_;
};

/// Pair criterion: synchronizing iff every pair of states can be merged.
inline bool is_synchronizing(const Dfa& dfa) {
  if (dfa.states() == 1) return true;
  return PairMergeTable(dfa).all_mergeable();
}

inline bool is_strongly_connected(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  auto reaches_all = [n](const std::vector<std::vector<State>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<State> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      State p = stack.back();
      stack.pop_back();
      for (State q : adj[p]) {
        if (!seen[q]) {
          seen[q] = true;
          ++count;
          stack.push_back(q);
        }
      }
    }
    return count == n;
  };
  std::vector<std::vector<State>> forward(n), backward(n);
  for (Letter a = 0; a < dfa.letters(); ++a) {
    for (State p = 0; p < n; ++p) {
      forward[p].push_back(dfa.next(p, a));
      backward[dfa.next(p, a)].push_back(p);
    }
  }
  return reaches_all(forward) && reaches_all(backward);
}

}  // namespace cerny
