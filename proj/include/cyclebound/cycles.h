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


#ifndef CYCLEBOUND_CYCLES_H_
#define CYCLEBOUND_CYCLES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cyclebound/graph.h"
#include "cyclebound/metrics.h"

namespace cyclebound {

// A witness cycle v_0 .. v_{L-1} in cyclic order. Returned cycles are rooted
// at their smallest vertex with cycle[1] < cycle.back().
struct CycleReport {
  std::vector<Vertex> cycle;
  bool geodesic = false;

  std::size_t length() const { return cycle.size(); }
  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

// True iff `cycle` is a simple cycle of g: length >= 3, distinct vertices in
// range, cyclically consecutive vertices adjacent.
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle);

// A longest simple cycle, or nullopt iff g is a forest. Among longest cycles
// the lexicographically smallest rooted sequence is returned.
std::optional<CycleReport> circumference(const Graph& g);

// Some cycle of length >= min_length, or nullopt if none exists. Stops at the
// first witness. Throws InvalidArgument when min_length < 3.
std::optional<CycleReport> cycle_at_least(const Graph& g, std::size_t min_length);

// True iff every pair of cycle vertices is as far apart in g as along the
// cycle. Throws InvalidArgument if `cycle` is not a cycle of g.
bool is_geodesic_cycle(const Graph& g, std::span<const Vertex> cycle);
bool is_geodesic_cycle(const DistanceMatrix& d, std::span<const Vertex> cycle);

// A geodesic cycle of exactly `length` vertices, or nullopt. The result is the
// lexicographically smallest rooted sequence. Throws InvalidArgument on
// length < 3 or disconnected g.
std::optional<CycleReport> find_geodesic_cycle(const Graph& g, std::size_t length);
std::optional<CycleReport> find_geodesic_cycle(const Graph& g, const DistanceMatrix& d,
                                               std::size_t length);

// Longest geodesic cycle, searching downward from
// min(circumference, 2 * diameter + 1). nullopt iff g is a forest.
std::optional<CycleReport> longest_geodesic_cycle(const Graph& g);
// Same, reusing a distance matrix and a known circumference (0 = forest).
std::optional<CycleReport> longest_geodesic_cycle(const Graph& g, const DistanceMatrix& d,
                                                  std::size_t circumference);

struct BlockDecomposition {
  // Each block as its sorted edge list; blocks sorted by their first edge.
  std::vector<std::vector<Edge>> blocks;
  VertexSet cut_vertices;

  // Sorted vertex list of block i.
  std::vector<Vertex> block_vertices(std::size_t i) const;
};

// Biconnected components via DFS low-link. Throws InvalidArgument on a
// disconnected graph.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace cyclebound

#endif  // CYCLEBOUND_CYCLES_H_
