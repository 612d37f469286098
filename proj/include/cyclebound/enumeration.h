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


#ifndef CYCLEBOUND_ENUMERATION_H_
#define CYCLEBOUND_ENUMERATION_H_

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclebound/graph.h"

namespace cyclebound {

// graph6 of the canonically relabeled graph; equal for two graphs iff they
// are isomorphic.
using CanonicalForm = std::string;

// Throws InvalidArgument when g.order() > kMaxGraph6Order.
CanonicalForm canonical_form(const Graph& g);

// Same, for a graph given as adjacency bit rows (rows[v] bit u set iff uv is
// an edge), n = rows.size() <= 62. Used by the enumerator's hot loop.
CanonicalForm canonical_form(std::span<const std::uint64_t> rows);

// Largest order enumerate_connected guarantees; one more is best effort.
inline constexpr std::size_t kMaxGuaranteedOrder = 9;
inline constexpr std::size_t kMaxEnumerationOrder = 10;

// Sorted canonical graph6 strings of all connected graphs on n + 1 vertices,
// built by joining a new vertex to every nonempty subset of each parent's
// vertices. `parents` must be the complete level for n.
std::vector<std::string> extend_level(const std::vector<std::string>& parents,
                                      std::size_t workers = 0);

// One sorted canonical graph6 string per connected isomorphism class on n
// vertices. Throws InvalidArgument unless 1 <= n <= kMaxEnumerationOrder.
std::vector<std::string> connected_graph6(std::size_t n, std::size_t workers = 0);

enum class Provenance { kGenerated, kFile };

// A one-pass source of graphs. Generated streams walk the requested orders
// in increasing n, each level sorted; file streams parse line by line.
class GraphStream {
 public:
  struct Record {
    Graph graph;
    std::string graph6;
    std::size_t line = 0;  // 1-based; file streams only
  };

  // All connected classes with n_min <= n <= n_max.
  static GraphStream generated(std::size_t n_min, std::size_t n_max,
                               std::size_t workers = 0);
  // Wraps graph6 lines already in memory.
  static GraphStream from_lines(std::vector<std::string> lines,
                                Provenance provenance = Provenance::kGenerated);
  // Throws Error if the file cannot be opened.
  static GraphStream from_file(const std::string& path);

  GraphStream(GraphStream&&) noexcept;
  GraphStream& operator=(GraphStream&&) noexcept;
  ~GraphStream();

  // Next record, or nullopt at end. Throws ParseError (with line set) on a
  // malformed file line.
  std::optional<Record> next();

  Provenance provenance() const { return provenance_; }
  std::size_t count() const { return count_; }

  // Implementation hook; concrete sources live in enumeration.cc.
  struct Source;

 private:
  GraphStream(std::unique_ptr<Source> source, Provenance provenance);

  std::unique_ptr<Source> source_;
  Provenance provenance_;
  std::size_t count_ = 0;
};

// Stream of the connected classes on exactly n vertices.
GraphStream enumerate_connected(std::size_t n, std::size_t workers = 0);

GraphStream read_graph6_stream(const std::string& path);

}  // namespace cyclebound

#endif  // CYCLEBOUND_ENUMERATION_H_
