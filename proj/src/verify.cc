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


#include "cyclebound/verify.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "cyclebound/parallel.h"
#include "json.hpp"

namespace cyclebound {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kBatch = 4096;

Verdict base_verdict(Claim claim, const Graph& g, const MetricProfile& p) {
  Verdict v;
  v.claim = claim;
  v.order = g.order();
  v.radius = p.radius;
  v.diameter = p.diameter;
  return v;
}

MetricProfile connected_profile(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("claim checkers require a connected graph");
  return metric_profile(g);
}

// d <= 2r - 2 without unsigned wrap-around.
bool diameter_within(const MetricProfile& p) { return p.diameter + 2 <= 2 * p.radius; }

std::size_t exact_circumference(const Graph& g) {
  const auto c = circumference(g);
  return c ? c->length() : 0;
}

// A violated verdict is only reported after the radius and diameter are
// re-measured through the independent distance-matrix route.
void confirm_violation(const Graph& g, const Verdict& v) {
  const MetricProfile again = metric_profile(DistanceMatrix(g));
  if (again.radius != v.radius || again.diameter != v.diameter) {
    throw ContractViolation("metric re-derivation disagrees on " + to_graph6(g));
  }
}

}  // namespace

std::string_view claim_id(Claim claim) {
  switch (claim) {
    case Claim::kTheorem1: return "thm1";
    case Claim::kCorollary3: return "cor3";
    case Claim::kTheorem4: return "thm4";
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view id) {
  for (Claim c : {Claim::kTheorem1, Claim::kCorollary3, Claim::kTheorem4}) {
    if (claim_id(c) == id) return c;
  }
  return std::nullopt;
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kVacuous: return "vacuous";
    case Status::kHolds: return "holds";
    case Status::kViolated: return "violated";
  }
  return "?";
}

Verdict check_theorem1(const Graph& g) {
  const MetricProfile p = connected_profile(g);
  Verdict v = base_verdict(Claim::kTheorem1, g, p);
  if (g.edge_count() + 1 == g.order() || !diameter_within(p)) return v;

  const std::size_t bound = 4 * std::size_t{p.radius} - 2 * std::size_t{p.diameter};
  if (auto witness = cycle_at_least(g, bound)) {
    v.status = Status::kHolds;
    v.cycle = std::move(witness);
    return v;
  }
  auto longest = circumference(g);
  v.circumference = longest ? longest->length() : 0;
  v.cycle = std::move(longest);
  if (*v.circumference >= bound) {
    v.status = Status::kHolds;
    return v;
  }
  v.status = Status::kViolated;
  confirm_violation(g, v);
  return v;
}

Verdict check_corollary3(const Graph& g) {
  const MetricProfile p = connected_profile(g);
  Verdict v = base_verdict(Claim::kCorollary3, g, p);
  if (auto longer = cycle_at_least(g, 4)) {
    v.cycle = std::move(longer);
    return v;
  }
  auto longest = circumference(g);
  v.circumference = longest ? longest->length() : 0;
  v.cycle = std::move(longest);
  if (v.circumference != 3u) return v;

  const bool ok = p.diameter + 1 == 2 * p.radius || p.diameter == 2 * p.radius;
  v.status = ok ? Status::kHolds : Status::kViolated;
  if (!ok) confirm_violation(g, v);
  return v;
}

Verdict check_theorem4(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("claim checkers require a connected graph");
  const DistanceMatrix d(g);
  const MetricProfile p = metric_profile(d);
  Verdict v = base_verdict(Claim::kTheorem4, g, p);
  if (!diameter_within(p) || g.order() + 2 > 3 * std::size_t{p.radius}) return v;

  const std::size_t r = p.radius;
  for (std::size_t length : {2 * r, 2 * r + 1}) {
    if (auto hit = find_geodesic_cycle(g, d, length)) {
      v.status = Status::kHolds;
      v.cycle = std::move(hit);
      return v;
    }
  }
  v.status = Status::kViolated;
  confirm_violation(g, v);
  return v;
}

Verdict check_claim(Claim claim, const Graph& g) {
  switch (claim) {
    case Claim::kTheorem1: return check_theorem1(g);
    case Claim::kCorollary3: return check_corollary3(g);
    case Claim::kTheorem4: return check_theorem4(g);
  }
  throw InvalidArgument("unknown claim");
}

VerificationReport verify_stream(Claim claim, GraphStream& stream, std::size_t workers,
                                 const VerdictObserver& observe) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = claim;
  report.source = stream.provenance();

  std::vector<GraphStream::Record> batch;
  std::vector<Verdict> verdicts;
  batch.reserve(kBatch);
  for (;;) {
    batch.clear();
    while (batch.size() < kBatch) {
      auto record = stream.next();
      if (!record) break;
      if (!is_connected(record->graph)) {
        throw InvalidArgument(
            (record->line ? "line " + std::to_string(record->line) + ": " : std::string()) +
            "graph " + record->graph6 + " is disconnected");
      }
      batch.push_back(std::move(*record));
    }
    if (batch.empty()) break;
    verdicts.assign(batch.size(), Verdict{});
    parallel_for(
        batch.size(), workers,
        [&](std::size_t i) { verdicts[i] = check_claim(claim, batch[i].graph); }, 64);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.graphs_checked;
      switch (verdicts[i].status) {
        case Status::kVacuous: ++report.vacuous; break;
        case Status::kHolds: ++report.holds; break;
        case Status::kViolated:
          ++report.violated;
          report.counterexamples.push_back(batch[i].graph6);
          break;
      }
      if (observe) observe(batch[i], verdicts[i]);
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_range(Claim claim, std::size_t n_max, std::size_t workers) {
  GraphStream stream = GraphStream::generated(1, n_max, workers);
  VerificationReport report = verify_stream(claim, stream, workers);
  report.n_min = 1;
  report.n_max = n_max;
  return report;
}

VerificationReport verify_file(Claim claim, const std::string& path, std::size_t workers) {
  GraphStream stream = GraphStream::from_file(path);
  VerificationReport report = verify_stream(claim, stream, workers);
  report.path = path;
  return report;
}

std::string report_json(const VerificationReport& report, bool include_timing) {
  Json universe;
  if (report.source == Provenance::kGenerated) {
    universe["source"] = "generated";
    universe["n_min"] = report.n_min;
    universe["n_max"] = report.n_max;
  } else {
    universe["source"] = "file";
    universe["path"] = report.path;
  }
  Json j;
  j["claim"] = claim_id(report.claim);
  j["universe"] = universe;
  j["graphs_checked"] = report.graphs_checked;
  j["vacuous"] = report.vacuous;
  j["holds"] = report.holds;
  j["violated"] = report.violated;
  j["counterexamples"] = report.counterexamples;
  if (include_timing) j["wall_time_seconds"] = report.wall_seconds;
  return j.dump();
}

MinimalOrderResult minimal_order_search(Hops r, Hops d, std::size_t cap,
                                        std::size_t workers) {
  if (r > d || d > 2 * r) {
    throw InvalidArgument("no connected graph has radius " + std::to_string(r) +
                          " and diameter " + std::to_string(d) + " (need r <= d <= 2r)");
  }
  if (cap < 1 || cap > kMaxEnumerationOrder) {
    throw InvalidArgument("minimal order search cap must be in 1.." +
                          std::to_string(kMaxEnumerationOrder));
  }
  MinimalOrderResult result{r, d, cap, std::nullopt, {}};
  std::vector<std::string> level{to_graph6(Graph::from_edges(1, {}))};
  for (std::size_t n = 1; n <= cap; ++n) {
    if (n > 1) level = extend_level(level, workers);
    for (const std::string& text : level) {
      const MetricProfile p = metric_profile(parse_graph6(text));
      if (p.radius == r && p.diameter == d) result.witnesses.push_back(text);
    }
    if (!result.witnesses.empty()) {
      result.order = n;
      break;
    }
  }
  return result;
}

std::string minimal_order_json(const MinimalOrderResult& result) {
  Json j;
  j["r"] = result.radius;
  j["d"] = result.diameter;
  j["cap"] = result.cap;
  if (result.order) {
    j["status"] = "found";
    j["minimal_order"] = *result.order;
  } else {
    j["status"] = "undetermined";
    j["minimal_order"] = nullptr;
  }
  j["witnesses"] = result.witnesses;
  return j.dump();
}

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.order = g.order();
  const std::size_t c = exact_circumference(g);
  if (c > 0) s.circumference = c;
  if (!is_connected(g)) return s;
  const DistanceMatrix d(g);
  const MetricProfile p = metric_profile(d);
  s.radius = p.radius;
  s.diameter = p.diameter;
  if (auto geo = longest_geodesic_cycle(g, d, c)) s.longest_geodesic = geo->length();
  return s;
}

}  // namespace cyclebound
