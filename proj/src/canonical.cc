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


// Canonical labeling by individualization and refinement.
//
// Nodes of the search tree are ordered partitions of the vertex set; each is
// refined to the coarsest equitable partition (every vertex of a cell has the
// same number of neighbours in every other cell). A node branches on the first
// non-singleton cell by individualizing each of its vertices in turn. Each
// discrete leaf is a labeling, and the canonical form is the relabeled graph
// with the smallest upper-triangle bit string in graph6 order.
//
// Two kinds of automorphism pruning keep highly symmetric graphs cheap:
//  - a child is skipped when a stored automorphism fixing the node's prefix
//    maps it to an already explored sibling;
//  - a leaf equal to the first (or best) leaf yields an automorphism that
//    maps the whole subtree below the divergence point onto an explored
//    one, so the search jumps straight back there.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclebound/enumeration.h"

namespace cyclebound {
namespace {

constexpr std::size_t kMaxN = 64;
constexpr std::size_t kMaxStoredAutomorphisms = 64;

using Mask = std::uint64_t;
using Labeling = std::array<std::uint8_t, kMaxN>;

struct Partition {
  std::array<Mask, kMaxN> cells;
  std::size_t count = 0;
};

class Canonizer {
 public:
  explicit Canonizer(std::span<const Mask> rows) : rows_(rows), n_(rows.size()) {}

  std::string run() {
    Partition root;
    root.cells[0] = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    root.count = 1;
    Mask queue[2 * kMaxN + 1];
    queue[0] = root.cells[0];
    refine(root, queue, 1);
    search(root, 0);
    return encode();
  }

 private:
  // Splits cells against every splitter in the work queue, appending new
  // pieces as further splitters, until the partition is equitable.
  void refine(Partition& p, Mask* queue, std::size_t queued) const {
    std::size_t head = 0;
    std::array<std::uint8_t, kMaxN> counts;
    std::array<std::uint8_t, kMaxN> order;
    while (head < queued && p.count < n_) {
      const Mask splitter = queue[head++];
      for (std::size_t x = 0; x < p.count; ++x) {
        const Mask cell = p.cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        std::size_t size = 0;
        bool uniform = true;
        for (Mask rest = cell; rest != 0; rest &= rest - 1) {
          const auto v = static_cast<std::uint8_t>(std::countr_zero(rest));
          counts[v] = static_cast<std::uint8_t>(std::popcount(rows_[v] & splitter));
          if (size > 0 && counts[v] != counts[order[0]]) uniform = false;
          order[size++] = v;
        }
        if (uniform) continue;
        std::stable_sort(order.begin(), order.begin() + size,
                         [&](std::uint8_t a, std::uint8_t b) { return counts[a] < counts[b]; });
        Mask pieces[kMaxN];
        std::size_t piece_count = 0;
        for (std::size_t i = 0; i < size; ++i) {
          if (i == 0 || counts[order[i]] != counts[order[i - 1]]) pieces[piece_count++] = 0;
          pieces[piece_count - 1] |= Mask{1} << order[i];
        }
        for (std::size_t y = p.count; y-- > x + 1;) p.cells[y + piece_count - 1] = p.cells[y];
        for (std::size_t i = 0; i < piece_count; ++i) {
          p.cells[x + i] = pieces[i];
          queue[queued++] = pieces[i];
        }
        p.count += piece_count - 1;
        x += piece_count - 1;
      }
    }
  }

  // Returns the depth of the node that should continue the search.
  std::size_t search(const Partition& p, std::size_t depth) {
    if (p.count == n_) return leaf(p, depth);
    std::size_t target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const Mask cell = p.cells[target];
    Mask explored = 0;
    for (Mask rest = cell; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::uint8_t>(std::countr_zero(rest));
      if (explored != 0 && (orbit(v, depth) & explored) != 0) continue;
      explored |= Mask{1} << v;
      Partition child = p;
      for (std::size_t y = child.count; y-- > target + 1;) child.cells[y + 1] = child.cells[y];
      child.cells[target] = Mask{1} << v;
      child.cells[target + 1] = cell & ~(Mask{1} << v);
      ++child.count;
      Mask queue[2 * kMaxN + 1];
      queue[0] = Mask{1} << v;
      refine(child, queue, 1);
      prefix_[depth] = v;
      const std::size_t resume = search(child, depth + 1);
      if (resume < depth) return resume;
    }
    return depth == 0 ? 0 : depth - 1;
  }

  // Orbit of v under the stored automorphisms that fix prefix_[0..depth).
  Mask orbit(std::uint8_t v, std::size_t depth) const {
    std::size_t usable[kMaxStoredAutomorphisms];
    std::size_t usable_count = 0;
    for (std::size_t a = 0; a < automorphisms_.size(); ++a) {
      bool fixes = true;
      for (std::size_t i = 0; i < depth && fixes; ++i) {
        fixes = automorphisms_[a][prefix_[i]] == prefix_[i];
      }
      if (fixes) usable[usable_count++] = a;
    }
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        for (std::size_t i = 0; i < usable_count; ++i) {
          next |= Mask{1} << automorphisms_[usable[i]][u];
        }
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  std::size_t leaf(const Partition& p, std::size_t depth) {
    Labeling lab;
    Labeling inv;
    for (std::size_t j = 0; j < n_; ++j) {
      lab[j] = static_cast<std::uint8_t>(std::countr_zero(p.cells[j]));
      inv[lab[j]] = static_cast<std::uint8_t>(j);
    }
    std::array<Mask, kMaxN> code;
    for (std::size_t j = 0; j < n_; ++j) {
      Mask column = 0;
      for (Mask rest = rows_[lab[j]]; rest != 0; rest &= rest - 1) {
        const std::size_t i = inv[std::countr_zero(rest)];
        if (i < j) column |= Mask{1} << (63 - i);
      }
      code[j] = column;
    }

    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = lab;
      first_prefix_ = best_prefix_ = prefix_;
      first_depth_ = best_depth_ = depth;
      return depth == 0 ? 0 : depth - 1;
    }

    std::size_t resume = depth - 1;
    const auto same = [&](const std::array<Mask, kMaxN>& other) {
      return std::equal(code.begin(), code.begin() + n_, other.begin());
    };
    if (same(first_code_)) {
      record_automorphism(lab, first_lab_);
      resume = std::min(resume, common_prefix(first_prefix_, first_depth_, depth));
    }
    const int cmp = compare(code, best_code_);
    if (cmp == 0 && best_lab_ != first_lab_) {
      record_automorphism(lab, best_lab_);
      resume = std::min(resume, common_prefix(best_prefix_, best_depth_, depth));
    } else if (cmp < 0) {
      best_code_ = code;
      best_lab_ = lab;
      best_prefix_ = prefix_;
      best_depth_ = depth;
    }
    return resume;
  }

  std::size_t common_prefix(const Labeling& other, std::size_t other_depth,
                            std::size_t depth) const {
    std::size_t k = 0;
    while (k < depth && k < other_depth && other[k] == prefix_[k]) ++k;
    return k;
  }

  int compare(const std::array<Mask, kMaxN>& a, const std::array<Mask, kMaxN>& b) const {
    for (std::size_t j = 1; j < n_; ++j) {
      if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
  }

  // Stores the map from this leaf's labeling onto `target`'s.
  void record_automorphism(const Labeling& lab, const Labeling& target) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    Labeling gamma;
    for (std::size_t j = 0; j < n_; ++j) gamma[lab[j]] = target[j];
    automorphisms_.push_back(gamma);
  }

  std::string encode() const {
    const std::size_t pair_count = n_ * (n_ - 1) / 2;
    std::string out(1 + (pair_count + 5) / 6, '\0');
    out[0] = static_cast<char>(n_ + 63);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if ((best_code_[j] >> (63 - i)) & 1) out[1 + k / 6] |= static_cast<char>(1 << (5 - k % 6));
      }
    }
    for (std::size_t b = 1; b < out.size(); ++b) out[b] = static_cast<char>(out[b] + 63);
    return out;
  }

  std::span<const Mask> rows_;
  std::size_t n_;
  Labeling prefix_{};

  bool have_first_ = false;
  std::array<Mask, kMaxN> first_code_{};
  std::array<Mask, kMaxN> best_code_{};
  Labeling first_lab_{};
  Labeling best_lab_{};
  Labeling first_prefix_{};
  Labeling best_prefix_{};
  std::size_t first_depth_ = 0;
  std::size_t best_depth_ = 0;
  std::vector<Labeling> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(std::span<const std::uint64_t> rows) {
  if (rows.empty() || rows.size() > kMaxGraph6Order) {
    throw InvalidArgument("canonical form supports 1 <= n <= 62, got n = " +
                          std::to_string(rows.size()));
  }
  return Canonizer(rows).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw InvalidArgument("canonical form supports n <= 62, got n = " + std::to_string(n));
  }
  std::vector<std::uint64_t> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.row(v)[0];
  return canonical_form(rows);
}

}  // namespace cyclebound
