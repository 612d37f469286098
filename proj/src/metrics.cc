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


#include "cyclebound/metrics.h"

#include <algorithm>
#include <string>

namespace cyclebound {
namespace {

void bfs_into(const Graph& g, Vertex source, std::span<Hops> dist,
              std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

void check_source(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  }
}

MetricProfile profile_from(std::vector<Hops> ecc) {
  MetricProfile p;
  const std::size_t n = ecc.size();
  p.radius = *std::min_element(ecc.begin(), ecc.end());
  p.diameter = *std::max_element(ecc.begin(), ecc.end());
  p.center = VertexSet(n);
  p.periphery = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    if (ecc[v] == p.radius) p.center.insert(v);
    if (ecc[v] == p.diameter) p.periphery.insert(v);
  }
  p.eccentricities = std::move(ecc);
  return p;
}

}  // namespace

std::vector<Hops> bfs_distances(const Graph& g, Vertex source) {
  check_source(g, source);
  std::vector<Hops> dist(g.order());
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  bfs_into(g, source, dist, queue);
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  if (n_ > kMaxOrder) {
    throw InvalidArgument("distance matrix supports n <= " + std::to_string(kMaxOrder) +
                          ", got n = " + std::to_string(n_));
  }
  d_.resize(n_ * n_);
  std::vector<Vertex> queue;
  queue.reserve(n_);
  for (Vertex u = 0; u < n_; ++u) {
    bfs_into(g, u, {d_.data() + u * n_, n_}, queue);
    if (queue.size() != n_) connected_ = false;
  }
}

MetricProfile metric_profile(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Hops> dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::vector<Hops> ecc(n);
  for (Vertex u = 0; u < n; ++u) {
    bfs_into(g, u, dist, queue);
    if (queue.size() != n) {
      throw InvalidArgument("metric profile is undefined for a disconnected graph");
    }
    ecc[u] = dist[queue.back()];
  }
  return profile_from(std::move(ecc));
}

MetricProfile metric_profile(const DistanceMatrix& d) {
  if (!d.connected()) {
    throw InvalidArgument("metric profile is undefined for a disconnected graph");
  }
  std::vector<Hops> ecc(d.order());
  for (Vertex u = 0; u < d.order(); ++u) {
    const auto row = d.row(u);
    ecc[u] = *std::max_element(row.begin(), row.end());
  }
  return profile_from(std::move(ecc));
}

Hops distance_to_subgraph(const Graph& g, Vertex u, const VertexSet& h) {
  check_source(g, u);
  if (h.empty()) throw InvalidArgument("distance to an empty subgraph is undefined");
  if (h.contains(u)) return 0;
  const auto dist = bfs_distances(g, u);
  Hops best = kUnreachable;
  for (Vertex v : h.members()) {
    if (v < dist.size()) best = std::min(best, dist[v]);
  }
  if (best == kUnreachable) {
    throw InvalidArgument("subgraph is not reachable from vertex " + std::to_string(u));
  }
  return best;
}

}  // namespace cyclebound
