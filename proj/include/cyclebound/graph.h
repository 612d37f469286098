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

#ifndef CYCLEBOUND_GRAPH_H_
#define CYCLEBOUND_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclebound {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was not met.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 text. `offset` is the byte offset inside the line and
// `line` is the 1-based line number when parsing a stream (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

// A generator or checker produced a result that fails its own contract.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

namespace bits {

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline bool test(std::span<const std::uint64_t> w, std::size_t i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> w, std::size_t i) {
  w[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void reset(std::span<std::uint64_t> w, std::size_t i) {
  w[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

// Calls f(i) for every set bit, in increasing order.
template <typename F>
void for_each(std::span<const std::uint64_t> w, F&& f) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::uint64_t word = w[k];
    while (word != 0) {
      const int b = __builtin_ctzll(word);
      f(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
}

}  // namespace bits

// A subset of the vertices 0..universe-1 with bitset semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(bits::words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v < universe_ && bits::test(words_, v);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is held twice: as bit rows (one row of words_per_row() words per
// vertex) for O(n/64) membership and set algebra, and as sorted neighbor
// lists for traversal.
class Graph {
 public:
  // Builds a graph from an edge list. Duplicate and reversed pairs collapse
  // to one edge. Throws InvalidArgument on n == 0, self-loops and
  // out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return bits::test(row(u), v);
  }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

// Largest order representable with the single-byte graph6 size field.
inline constexpr std::size_t kMaxGraph6Order = 62;

// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
// line terminator are accepted and ignored. Throws ParseError.
Graph parse_graph6(std::string_view text);

// Encodes g as graph6 without header or newline. Throws InvalidArgument
// when g.order() > kMaxGraph6Order.
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

// Relabels vertex v as sigma[v]: edge (u, v) of the result exists iff
// (sigma^-1(u), sigma^-1(v)) is an edge of g.
Graph permute(const Graph& g, std::span<const Vertex> sigma);

}  // namespace cyclebound

#endif  // CYCLEBOUND_GRAPH_H_
