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


#ifndef CYCLEBOUND_METRICS_H_
#define CYCLEBOUND_METRICS_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cyclebound/graph.h"

namespace cyclebound {

using Hops = std::uint32_t;

// Distance marker for pairs in different components. No hop count can reach
// it because orders are bounded far below 2^32.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

// Exact hop distances from `source`; unreachable vertices get kUnreachable.
std::vector<Hops> bfs_distances(const Graph& g, Vertex source);

// All-pairs hop distances from one BFS per vertex.
class DistanceMatrix {
 public:
  // Largest order for which the full matrix is materialized.
  static constexpr std::size_t kMaxOrder = 1024;

  // Throws InvalidArgument when g.order() > kMaxOrder.
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  Hops operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::span<const Hops> row(Vertex u) const { return {d_.data() + u * n_, n_}; }
  bool connected() const { return connected_; }

 private:
  std::size_t n_;
  bool connected_ = true;
  std::vector<Hops> d_;
};

struct MetricProfile {
  std::vector<Hops> eccentricities;
  Hops radius = 0;
  Hops diameter = 0;
  VertexSet center;
  VertexSet periphery;
};

// Eccentricities, radius, diameter, center and periphery of a connected
// graph. Rows are recomputed per source, so any order is accepted.
// Throws InvalidArgument on disconnected input.
MetricProfile metric_profile(const Graph& g);
MetricProfile metric_profile(const DistanceMatrix& d);

// min over v in h of d(u, v). Throws InvalidArgument if h is empty, u is out
// of range, or no vertex of h is reachable from u.
Hops distance_to_subgraph(const Graph& g, Vertex u, const VertexSet& h);

}  // namespace cyclebound

#endif  // CYCLEBOUND_METRICS_H_
