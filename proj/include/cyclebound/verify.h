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


#ifndef CYCLEBOUND_VERIFY_H_
#define CYCLEBOUND_VERIFY_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclebound/cycles.h"
#include "cyclebound/enumeration.h"
#include "cyclebound/graph.h"
#include "cyclebound/metrics.h"

namespace cyclebound {

// thm1: d <= 2r-2 implies c >= 4r-2d (this also covers "c >= 4").
// cor3: c == 3 implies d in {2r-1, 2r}.
// thm4: d <= 2r-2 and n <= 3r-2 imply a geodesic cycle of length 2r or 2r+1.
enum class Claim { kTheorem1, kCorollary3, kTheorem4 };

std::string_view claim_id(Claim claim);
std::optional<Claim> parse_claim(std::string_view id);

enum class Status { kVacuous, kHolds, kViolated };

std::string_view status_name(Status status);

// Per-graph outcome. Every field is measured from the graph in the call that
// produced the verdict; nothing is cached between calls.
struct Verdict {
  Claim claim = Claim::kTheorem1;
  Status status = Status::kVacuous;
  std::size_t order = 0;
  Hops radius = 0;
  Hops diameter = 0;
  // Exact circumference (0 for a forest) when the checker had to compute it.
  std::optional<std::size_t> circumference;
  // Cycle backing the verdict, if any.
  std::optional<CycleReport> cycle;
};

// All checkers throw InvalidArgument on a disconnected graph.
Verdict check_theorem1(const Graph& g);
Verdict check_corollary3(const Graph& g);
Verdict check_theorem4(const Graph& g);
Verdict check_claim(Claim claim, const Graph& g);

struct VerificationReport {
  Claim claim = Claim::kTheorem1;
  Provenance source = Provenance::kGenerated;
  std::size_t n_min = 0;  // generated universes
  std::size_t n_max = 0;
  std::string path;       // file universes
  std::size_t graphs_checked = 0;
  std::size_t vacuous = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::vector<std::string> counterexamples;  // sorted graph6
  double wall_seconds = 0;
};

// Optional per-graph hook, called in stream order with every verdict.
using VerdictObserver = std::function<void(const GraphStream::Record&, const Verdict&)>;

// Checks every graph of `stream`. Work is fanned out over `workers` threads
// (0 = default) in batches; the result does not depend on the worker count.
VerificationReport verify_stream(Claim claim, GraphStream& stream, std::size_t workers = 0,
                                 const VerdictObserver& observe = {});

// All connected classes of order 1..n_max.
VerificationReport verify_range(Claim claim, std::size_t n_max, std::size_t workers = 0);

VerificationReport verify_file(Claim claim, const std::string& path,
                               std::size_t workers = 0);

// One JSON object; keys in a fixed order.
std::string report_json(const VerificationReport& report, bool include_timing = true);

struct MinimalOrderResult {
  Hops radius = 0;
  Hops diameter = 0;
  std::size_t cap = 0;
  std::optional<std::size_t> order;     // nullopt: undetermined within cap
  std::vector<std::string> witnesses;   // sorted canonical graph6
};

inline constexpr std::size_t kDefaultMinimalOrderCap = 9;

// Smallest n for which a connected graph of radius r and diameter d exists,
// with every isomorphism class attaining it. Requires r <= d <= 2r and
// cap <= kMaxEnumerationOrder.
MinimalOrderResult minimal_order_search(Hops r, Hops d,
                                        std::size_t cap = kDefaultMinimalOrderCap,
                                        std::size_t workers = 0);

std::string minimal_order_json(const MinimalOrderResult& result);

// Row of the `analyze` table. Metric fields are empty for disconnected
// graphs; cycle fields are empty for forests.
struct GraphSummary {
  std::size_t order = 0;
  std::optional<Hops> radius;
  std::optional<Hops> diameter;
  std::optional<std::size_t> circumference;
  std::optional<std::size_t> longest_geodesic;
};

GraphSummary summarize(const Graph& g);

}  // namespace cyclebound

#endif  // CYCLEBOUND_VERIFY_H_
