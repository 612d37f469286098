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


#include "cyclebound/graph.h"

#include <algorithm>
#include <bit>

namespace cyclebound {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InvalidArgument("vertex " + std::to_string(v) +
                          " outside vertex set universe of size " +
                          std::to_string(universe_));
  }
  bits::set(words_, v);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) bits::reset(words_, v);
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  bits::for_each(words_, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.words_ = bits::words_for(n);
  g.rows_.assign(n * g.words_, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") has an endpoint outside 0.." +
                            std::to_string(n - 1));
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    bits::set({g.rows_.data() + u * g.words_, g.words_}, v);
    bits::set({g.rows_.data() + v * g.words_, g.words_}, u);
  }
  g.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t deg = 0;
    for (std::uint64_t w : g.row(v)) deg += static_cast<std::size_t>(std::popcount(w));
    g.offsets_[v + 1] = g.offsets_[v] + deg;
  }
  g.adj_.reserve(g.offsets_[n]);
  for (Vertex v = 0; v < n; ++v) {
    bits::for_each(g.row(v), [&](Vertex w) { g.adj_.push_back(w); });
  }
  g.edge_count_ = g.offsets_[n] / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == n;
}

Graph permute(const Graph& g, std::span<const Vertex> sigma) {
  const std::size_t n = g.order();
  if (sigma.size() != n) {
    throw InvalidArgument("permutation has " + std::to_string(sigma.size()) +
                          " entries, graph has " + std::to_string(n) + " vertices");
  }
  std::vector<char> hit(n, 0);
  for (Vertex image : sigma) {
    if (image >= n || hit[image]) {
      throw InvalidArgument("sigma is not a bijection on 0.." + std::to_string(n - 1));
    }
    hit[image] = 1;
  }
  std::vector<Edge> mapped;
  mapped.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) mapped.emplace_back(sigma[u], sigma[v]);
  return Graph::from_edges(n, mapped);
}

}  // namespace cyclebound
