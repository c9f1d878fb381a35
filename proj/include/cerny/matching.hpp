#pragma once

#include <cerny/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace cerny {

/// Maximum cardinality bipartite matching (Hopcroft-Karp). Left vertices
/// are scanned in index order and adjacency lists in insertion order, so the
/// result is deterministic; callers encode priorities through the order.
class BipartiteMatcher {
public:
  static constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

  BipartiteMatcher(std::size_t left, std::size_t right)
      : adjacency_(left), match_left_(left, unmatched), match_right_(right, unmatched) {}

  std::size_t left_size() const noexcept { return adjacency_.size(); }
  std::size_t right_size() const noexcept { return match_right_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= left_size() || v >= right_size()) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of bounds");
    }
    adjacency_[u].push_back(v);
  }

  /// Returns the matching size; results are then available via partner_of_left.
  std::size_t solve() {
    std::fill(match_left_.begin(), match_left_.end(), unmatched);
    std::fill(match_right_.begin(), match_right_.end(), unmatched);
    std::size_t size = 0;
    while (layer()) {
      for (std::size_t u = 0; u < left_size(); ++u)
        if (match_left_[u] == unmatched && augment(u)) ++size;
    }
    return size;
  }

  std::size_t partner_of_left(std::size_t u) const { return match_left_[u]; }
  std::size_t partner_of_right(std::size_t v) const { return match_right_[v]; }

private:
  static constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();

  bool layer() {
    std::queue<std::size_t> queue;
    level_.assign(left_size(), inf);
    for (std::size_t u = 0; u < left_size(); ++u) {
      if (match_left_[u] == unmatched) {
        level_[u] = 0;
        queue.push(u);
      }
    }
    bool found_free = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adjacency_[u]) {
        const std::size_t w = match_right_[v];
        if (w == unmatched) {
          found_free = true;
        } else if (level_[w] == inf) {
          level_[w] = level_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found_free;
  }

  bool augment(std::size_t u) {
    for (std::size_t v : adjacency_[u]) {
      const std::size_t w = match_right_[v];
      if (w == unmatched || (level_[w] == level_[u] + 1 && augment(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    level_[u] = inf;
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> level_;
};

}  // namespace cerny
