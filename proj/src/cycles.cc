// Copyright 2026 The cyclebound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cyclebound/cycles.h"

#include <algorithm>
#include <bit>
#include <string>

namespace cyclebound {
namespace {

// Backtracking over simple paths rooted at their smallest vertex. A cycle is
// recorded when it closes back at the root with path[1] < path.back(), so
// every cycle is met exactly once and in lexicographic order.
class CycleSearch {
 public:
  // Records only cycles strictly longer than `floor`; with stop_at_first the
  // first such cycle ends the search.
  CycleSearch(const Graph& g, std::size_t floor, bool stop_at_first)
      : g_(g),
        words_(g.words_per_row()),
        best_len_(floor),
        stop_at_first_(stop_at_first),
        used_(words_, 0),
        allowed_(words_, 0),
        reach_(words_, 0),
        frontier_(words_, 0),
        next_(words_, 0) {}

  std::optional<CycleReport> run() {
    const std::size_t n = g_.order();
    path_.reserve(n);
    for (Vertex root = 0; root < n; ++root) {
      if (n - root <= best_len_) break;
      root_ = root;
      std::fill(allowed_.begin(), allowed_.end(), 0);
      for (Vertex v = root + 1; v < n; ++v) bits::set(allowed_, v);
      std::fill(used_.begin(), used_.end(), 0);
      bits::set(used_, root);
      path_.assign(1, root);
      if (extend(root)) break;
    }
    if (best_.empty()) return std::nullopt;
    return CycleReport{best_, false};
  }

 private:
  // Vertices reachable from `head` through unused allowed vertices; returns
  // their number and leaves them in reach_.
  std::size_t reachable_from(Vertex head) {
    std::fill(reach_.begin(), reach_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    bits::set(frontier_, head);
    std::size_t count = 0;
    for (;;) {
      std::fill(next_.begin(), next_.end(), 0);
      bits::for_each(frontier_, [&](Vertex v) {
        const auto row = g_.row(v);
        for (std::size_t k = 0; k < words_; ++k) next_[k] |= row[k];
      });
      bool grew = false;
      for (std::size_t k = 0; k < words_; ++k) {
        next_[k] &= allowed_[k] & ~used_[k] & ~reach_[k];
        reach_[k] |= next_[k];
        if (next_[k] != 0) grew = true;
        count += static_cast<std::size_t>(std::popcount(next_[k]));
      }
      if (!grew) return count;
      frontier_.swap(next_);
    }
  }

  bool can_close(Vertex head) const {
    if (path_.size() >= 3 && g_.adjacent(head, root_)) return true;
    const auto root_row = g_.row(root_);
    for (std::size_t k = 0; k < words_; ++k) {
      if (reach_[k] & root_row[k]) return true;
    }
    return false;
  }

  bool extend(Vertex head) {
    if (path_.size() > 1) {
      const std::size_t reach = reachable_from(head);
      if (path_.size() + reach <= best_len_) return false;
      if (!can_close(head)) return false;
    }
    for (Vertex w : g_.neighbors(head)) {
      if (w == root_) {
        if (path_.size() >= 3 && path_[1] < head && path_.size() > best_len_) {
          best_len_ = path_.size();
          best_ = path_;
          if (stop_at_first_) return true;
        }
        continue;
      }
      if (w < root_ || bits::test(used_, w)) continue;
      bits::set(used_, w);
      path_.push_back(w);
      const bool stop = extend(w);
      path_.pop_back();
      bits::reset(used_, w);
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t words_;
  std::size_t best_len_;
  bool stop_at_first_;
  Vertex root_ = 0;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint64_t> frontier_;
  std::vector<std::uint64_t> next_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
};

Hops cyclic_distance(std::size_t i, std::size_t j, std::size_t length) {
  const std::size_t gap = j > i ? j - i : i - j;
  return static_cast<Hops>(std::min(gap, length - gap));
}

class GeodesicSearch {
 public:
  GeodesicSearch(const Graph& g, const DistanceMatrix& d, std::size_t length)
      : g_(g), d_(d), length_(length), used_(g.order(), 0) {}

  std::optional<CycleReport> run() {
    const std::size_t n = g_.order();
    if (length_ > n) return std::nullopt;
    path_.reserve(length_);
    for (Vertex root = 0; root + length_ <= n; ++root) {
      path_.assign(1, root);
      used_[root] = 1;
      const bool found = extend();
      used_[root] = 0;
      if (found) return CycleReport{path_, true};
    }
    return std::nullopt;
  }

 private:
  bool fits(Vertex w) const {
    const std::size_t k = path_.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (d_(path_[i], w) != cyclic_distance(i, k, length_)) return false;
    }
    return true;
  }

  bool extend() {
    const std::size_t k = path_.size();
    if (k == length_) return true;
    const Vertex root = path_.front();
    for (Vertex w : g_.neighbors(path_.back())) {
      if (w <= root || used_[w]) continue;
      if (k == length_ - 1 && w < path_[1]) continue;
      if (!fits(w)) continue;
      used_[w] = 1;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& d_;
  std::size_t length_;
  std::vector<char> used_;
  std::vector<Vertex> path_;
};

void require_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (!is_valid_cycle(g, cycle)) {
    throw InvalidArgument("vertex sequence is not a simple cycle of the graph");
  }
}

}  // namespace

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t n = g.order();
  if (cycle.size() < 3 || cycle.size() > n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

std::optional<CycleReport> circumference(const Graph& g) {
  return CycleSearch(g, 2, false).run();
}

std::optional<CycleReport> cycle_at_least(const Graph& g, std::size_t min_length) {
  if (min_length < 3) {
    throw InvalidArgument("cycle length bound must be at least 3, got " +
                          std::to_string(min_length));
  }
  if (min_length > g.order()) return std::nullopt;
  return CycleSearch(g, min_length - 1, true).run();
}

bool is_geodesic_cycle(const DistanceMatrix& d, std::span<const Vertex> cycle) {
  const std::size_t length = cycle.size();
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = i + 1; j < length; ++j) {
      if (d(cycle[i], cycle[j]) != cyclic_distance(i, j, length)) return false;
    }
  }
  return true;
}

bool is_geodesic_cycle(const Graph& g, std::span<const Vertex> cycle) {
  require_cycle(g, cycle);
  return is_geodesic_cycle(DistanceMatrix(g), cycle);
}

std::optional<CycleReport> find_geodesic_cycle(const Graph& g, const DistanceMatrix& d,
                                               std::size_t length) {
  if (length < 3) {
    throw InvalidArgument("geodesic cycle length must be at least 3, got " +
                          std::to_string(length));
  }
  if (!d.connected()) {
    throw InvalidArgument("geodesic cycle search requires a connected graph");
  }
  return GeodesicSearch(g, d, length).run();
}

std::optional<CycleReport> find_geodesic_cycle(const Graph& g, std::size_t length) {
  return find_geodesic_cycle(g, DistanceMatrix(g), length);
}

std::optional<CycleReport> longest_geodesic_cycle(const Graph& g, const DistanceMatrix& d,
                                                  std::size_t circumference) {
  const MetricProfile profile = metric_profile(d);
  if (circumference < 3) return std::nullopt;
  const std::size_t top =
      std::min<std::size_t>(circumference, 2 * std::size_t{profile.diameter} + 1);
  for (std::size_t length = top; length >= 3; --length) {
    if (auto hit = GeodesicSearch(g, d, length).run()) return hit;
  }
  // A shortest cycle is always geodesic, so this is unreachable.
  throw ContractViolation("graph has a cycle but no geodesic cycle was found");
}

std::optional<CycleReport> longest_geodesic_cycle(const Graph& g) {
  const DistanceMatrix d(g);
  const auto longest = circumference(g);
  return longest_geodesic_cycle(g, d, longest ? longest->length() : 0);
}

}  // namespace cyclebound
