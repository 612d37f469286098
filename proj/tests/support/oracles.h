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


// Brute-force reference implementations used only by tests. None of these
// call into the library's algorithms beyond the Graph container itself.

#ifndef CYCLEBOUND_TESTS_SUPPORT_ORACLES_H_
#define CYCLEBOUND_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclebound/graph.h"

namespace cyclebound::oracle {

// Labeled graphs on n <= 8 vertices as bit masks over vertex pairs, pair
// (i, j) with i < j at bit j*(j-1)/2 + i.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

// One representative (the numerically smallest labeled mask) of every
// connected isomorphism class on n vertices, by trying every relabeling of
// every labeled graph. Practical for n <= 7.
std::vector<Graph> connected_classes(std::size_t n);

// Connected class counts for orders 1..n_max from Burnside's lemma over
// the symmetric group (all graphs) and the inverse Euler transform.
std::vector<std::uint64_t> connected_class_counts(std::size_t n_max);

// Isomorphism by trying all n! bijections.
bool isomorphic(const Graph& a, const Graph& b);

// Floyd-Warshall; unreachable pairs get UINT32_MAX.
std::vector<std::vector<std::uint32_t>> all_pairs(const Graph& g);

// Length of a longest cycle (0 for forests): for every vertex subset, search
// all orderings for a Hamiltonian cycle of the subset.
std::size_t circumference(const Graph& g);

// Vertices whose deletion disconnects the graph.
std::vector<Vertex> cut_vertices(const Graph& g);

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace cyclebound::oracle

#endif  // CYCLEBOUND_TESTS_SUPPORT_ORACLES_H_
