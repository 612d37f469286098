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


#include <string>
#include <vector>

#include "cyclebound/graph.h"

namespace cyclebound {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("character " + std::to_string(c) + " outside 63..126",
                       base + i);
    }
  }
  const auto size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte == 126) {
    throw ParseError("multi-byte graph6 size field is not supported (n > 62)", base);
  }
  const std::size_t n = size_byte - 63;
  if (n == 0) throw ParseError("graph6 string encodes the empty graph", base);

  const std::size_t pair_count = n * (n - 1) / 2;
  const std::size_t body = (pair_count + 5) / 6;
  if (text.size() - 1 < body) {
    throw ParseError("truncated bit field: expected " + std::to_string(body) +
                         " data bytes, found " + std::to_string(text.size() - 1),
                     base + text.size());
  }
  if (text.size() - 1 > body) {
    throw ParseError("trailing bytes after bit field", base + 1 + body);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < body * 6; ++k) {
    const int value = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((value >> (5 - k % 6)) & 1) {
      throw ParseError("nonzero padding bit", base + 1 + k / 6);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw InvalidArgument("graph6 output supports n <= 62, got n = " + std::to_string(n));
  }
  const std::size_t pair_count = n * (n - 1) / 2;
  std::string out(1 + (pair_count + 5) / 6, '\0');
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] |= static_cast<char>(1 << (5 - k % 6));
    }
  }
  for (std::size_t b = 1; b < out.size(); ++b) out[b] = static_cast<char>(out[b] + 63);
  return out;
}

}  // namespace cyclebound
