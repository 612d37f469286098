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


#include "cyclebound/constructions.h"

#include <string>
#include <vector>

#include "cyclebound/cycles.h"
#include "cyclebound/metrics.h"

namespace cyclebound {
namespace {

std::string num(std::size_t v) { return std::to_string(v); }

void add_cycle(std::vector<Edge>& edges, std::size_t m) {
  for (Vertex i = 0; i < m; ++i) {
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % m));
  }
}

// Appends a path of k new vertices starting at `first`, hung off `anchor`.
void add_ray(std::vector<Edge>& edges, Vertex anchor, Vertex first, std::size_t k) {
  Vertex prev = anchor;
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = static_cast<Vertex>(first + i);
    edges.emplace_back(prev, v);
    prev = v;
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

std::size_t measured_circumference(const Graph& g) {
  const auto c = circumference(g);
  return c ? c->length() : 0;
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle length must be at least 3, got " + num(n));
  std::vector<Edge> edges;
  add_cycle(edges, n);
  return Graph::from_edges(n, edges);
}

Graph sun_graph(const SunSpec& spec) {
  if (spec.m < 3) throw InvalidArgument("sun-graph cycle length must be >= 3");
  if (spec.k < 1) throw InvalidArgument("sun-graph ray length must be >= 1");
  std::vector<Edge> edges;
  add_cycle(edges, spec.m);
  for (Vertex j = 0; j < spec.m; ++j) {
    add_ray(edges, j, static_cast<Vertex>(spec.m + j * spec.k), spec.k);
  }
  return Graph::from_edges(spec.m * (spec.k + 1), edges);
}

Graph extremal_graph(std::size_t r, std::size_t d) {
  const bool cycle_case = d == r && r >= 2;
  const bool sun_case = r >= 3 && d > r && d + 2 <= 2 * r;
  if (!cycle_case && !sun_case) {
    throw InvalidArgument("no extremal graph for r = " + num(r) + ", d = " + num(d) +
                          ": need r >= 2 with d = r, or r >= 3 with r < d <= 2r-2 "
                          "(for d >= 2r-1 the bound 4r-2d is vacuous)");
  }
  Graph g = cycle_case ? cycle_graph(2 * r) : sun_graph({4 * r - 2 * d, d - r});
  const MetricProfile p = metric_profile(g);
  expect(p.radius == r && p.diameter == d,
         "extremal graph has radius " + num(p.radius) + " and diameter " +
             num(p.diameter) + ", expected " + num(r) + " and " + num(d));
  expect(measured_circumference(g) == 4 * r - 2 * d,
         "extremal graph circumference differs from 4r-2d");
  return g;
}

Graph tightness_witness(std::size_t r) {
  if (r < 3) throw InvalidArgument("tightness witness needs r >= 3, got " + num(r));
  const std::size_t m = 2 * r - 1;
  std::vector<Edge> edges;
  add_cycle(edges, m);
  for (Vertex j = 0; j < r; ++j) {
    edges.emplace_back(2 * j, static_cast<Vertex>(m + j));
  }
  Graph g = Graph::from_edges(m + r, edges);

  const DistanceMatrix dist(g);
  const MetricProfile p = metric_profile(dist);
  expect(g.order() == 3 * r - 1, "tightness witness order is not 3r-1");
  expect(p.radius == r, "tightness witness radius is " + num(p.radius) + ", expected " + num(r));
  expect(p.diameter + 2 <= 2 * r, "tightness witness diameter exceeds 2r-2");
  expect(measured_circumference(g) == m, "tightness witness circumference is not 2r-1");
  std::size_t close_pairs = 0;
  for (Vertex a = m; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      expect(dist(a, b) >= 3, "two pendant ends closer than 3");
      if (dist(a, b) == 3) ++close_pairs;
    }
  }
  expect(close_pairs == 1, "expected exactly one pair of pendant ends at distance 3");
  return g;
}

Graph multi_sun(std::size_t m, std::size_t k, std::size_t t) {
  if (m < 3 || m % 2 != 0) throw InvalidArgument("multi-sun cycle length must be even and >= 4");
  if (k < 1) throw InvalidArgument("multi-sun ray length must be >= 1");
  if (t < 1) throw InvalidArgument("multi-sun needs at least one ray per cycle vertex");
  std::vector<Edge> edges;
  add_cycle(edges, m);
  for (Vertex j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < t; ++s) {
      add_ray(edges, j, static_cast<Vertex>(m + (j * t + s) * k), k);
    }
  }
  Graph g = Graph::from_edges(m * (1 + t * k), edges);

  const MetricProfile p = metric_profile(g);
  expect(p.radius == m / 2 + k, "multi-sun radius is " + num(p.radius) + ", expected m/2+k");
  expect(p.diameter == m / 2 + 2 * k,
         "multi-sun diameter is " + num(p.diameter) + ", expected m/2+2k");
  expect(measured_circumference(g) == m, "multi-sun circumference is not m");
  return g;
}

}  // namespace cyclebound
