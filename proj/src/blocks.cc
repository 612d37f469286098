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


#include <algorithm>
#include <vector>

#include "cyclebound/cycles.h"

namespace cyclebound {

std::vector<Vertex> BlockDecomposition::block_vertices(std::size_t i) const {
  std::vector<Vertex> out;
  for (const auto& [u, v] : blocks.at(i)) {
    out.push_back(u);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw InvalidArgument("block decomposition requires a connected graph");
  }
  const std::size_t n = g.order();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Vertex> stack;
  std::vector<Edge> edge_stack;
  BlockDecomposition result;

  std::size_t clock = 0;
  disc[0] = low[0] = clock++;
  stack.push_back(0);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      const Vertex w = nbrs[next_child[v]++];
      if (disc[w] == kUnvisited) {
        edge_stack.emplace_back(v, w);
        parent[w] = v;
        disc[w] = low[w] = clock++;
        stack.push_back(w);
      } else if (!(v != 0 && w == parent[v]) && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex p = parent[v];
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::vector<Edge> block;
      for (;;) {
        auto [a, b] = edge_stack.back();
        edge_stack.pop_back();
        block.emplace_back(std::min(a, b), std::max(a, b));
        if (a == p && b == v) break;
      }
      std::sort(block.begin(), block.end());
      result.blocks.push_back(std::move(block));
    }
  }
  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  std::vector<std::size_t> memberships(n, 0);
  for (std::size_t i = 0; i < result.blocks.size(); ++i) {
    for (Vertex v : result.block_vertices(i)) ++memberships[v];
  }
  result.cut_vertices = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    if (memberships[v] >= 2) result.cut_vertices.insert(v);
  }
  return result;
}

}  // namespace cyclebound
