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


#ifndef CYCLEBOUND_CONSTRUCTIONS_H_
#define CYCLEBOUND_CONSTRUCTIONS_H_

#include <cstddef>

#include "cyclebound/graph.h"

namespace cyclebound {

// Sun-graph S_{m,k}: cycle C_m with one pendant path ("ray") of k vertices
// hanging off every cycle vertex.
struct SunSpec {
  std::size_t m = 3;
  std::size_t k = 1;
};

// C_n on 0..n-1 with edges (i, i+1 mod n). Requires n >= 3.
Graph cycle_graph(std::size_t n);

// Cycle on 0..m-1; ray j occupies m+j*k .. m+j*k+k-1, nearest first.
Graph sun_graph(const SunSpec& spec);

// Graph of radius r, diameter d and circumference 4r-2d: C_{2r} when d == r,
// otherwise S_{4r-2d, d-r}. Admissible: r >= 2 with d == r, or r >= 3 with
// r < d <= 2r-2. The result is re-measured before it is returned.
Graph extremal_graph(std::size_t r, std::size_t d);

// C_{2r-1} on 0..2r-2 with a pendant vertex at each of the even cycle
// vertices 0, 2, .., 2r-2 (pendant of vertex 2j is 2r-1+j). Only the pendants
// at 2r-2 and 0 are at distance 3. Order 3r-1, radius r, circumference 2r-1.
// Requires r >= 3; the stated properties are re-measured before returning.
Graph tightness_witness(std::size_t r);

// C_m with t rays of length k at every cycle vertex; ray s of cycle vertex j
// occupies m+(j*t+s)*k onward. Requires even m >= 3, k >= 1, t >= 1. Throws
// ContractViolation unless radius m/2+k, diameter m/2+2k and circumference m
// are confirmed on the built graph.
Graph multi_sun(std::size_t m, std::size_t k, std::size_t t);

}  // namespace cyclebound

#endif  // CYCLEBOUND_CONSTRUCTIONS_H_
