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


// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. All thresholds are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclebound/cli.h"
#include "cyclebound/constructions.h"
#include "cyclebound/cycles.h"
#include "cyclebound/enumeration.h"
#include "cyclebound/metrics.h"
#include "cyclebound/verify.h"
#include "json.hpp"
#include "support/oracles.h"

namespace cyclebound {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str() + err.str()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

// Levels 1..9 of the enumerator, built once and shared by the sweeps.
const std::vector<std::vector<std::string>>& levels() {
  static const std::vector<std::vector<std::string>> cached = [] {
    std::vector<std::vector<std::string>> out(10);
    out[1] = connected_graph6(1);
    for (std::size_t n = 2; n <= 9; ++n) out[n] = extend_level(out[n - 1]);
    return out;
  }();
  return cached;
}

std::vector<Graph> graphs_of(std::size_t n) {
  std::vector<Graph> out;
  for (const auto& line : levels()[n]) out.push_back(parse_graph6(line));
  return out;
}

Outcome extremal_family() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t r = 2; r <= 8; ++r) {
    for (std::size_t d = r; d == r || (r >= 3 && d + 2 <= 2 * r); ++d) {
      ++pairs;
      const CliResult built = cli({"construct", "extremal", "--r", std::to_string(r), "--d",
                                   std::to_string(d)});
      const CliResult row = cli({"analyze"}, built.out);
      const auto cols = split(split(row.out, '\n').at(0), '\t');
      const bool ok = built.code == 0 && row.code == 0 && cols.size() == 6 &&
                      cols[2] == std::to_string(r) && cols[3] == std::to_string(d) &&
                      cols[4] == std::to_string(4 * r - 2 * d);
      if (!ok) {
        o.pass = false;
        o.detail += " bad(r=" + std::to_string(r) + ",d=" + std::to_string(d) + ")";
      }
    }
  }
  o.detail = std::to_string(pairs) + " (r,d) pairs, rad/diam/c exact" + o.detail;
  return o;
}

Outcome theorem1_sweep() {
  Outcome o;
  const std::vector<std::size_t> expected{0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  const auto burnside = oracle::connected_class_counts(9);
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 9; ++n) {
    const std::size_t count = levels()[n].size();
    total += count;
    if (count != expected[n] || burnside[n] != expected[n]) o.pass = false;
    if (n <= 7 && oracle::connected_classes(n).size() != count) o.pass = false;
  }
  const CliResult r = cli({"verify", "--claim", "thm1", "--max-n", "9"});
  const auto j = nlohmann::json::parse(r.out);
  const std::size_t checked = j["graphs_checked"];
  const std::size_t violated = j["violated"];
  o.pass = o.pass && r.code == 0 && checked == 273193 && total == 273193 && violated == 0;
  o.detail = "graphs_checked=" + std::to_string(checked) + " violated=" +
             std::to_string(violated) + " holds=" + std::to_string(j["holds"].get<std::size_t>());
  return o;
}

Outcome rad3_diam4_has_long_cycle() {
  Outcome o;
  std::size_t matching = 0, violated = 0;
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& g : graphs_of(n)) {
      const MetricProfile p = metric_profile(g);
      if (p.radius != 3 || p.diameter != 4) continue;
      ++matching;
      const auto hit = cycle_at_least(g, 4);
      if (!hit || !is_valid_cycle(g, hit->cycle)) ++violated;
    }
  }
  o.pass = violated == 0 && matching > 0;
  o.detail = std::to_string(matching) + " graphs with rad=3, diam=4; violated=" +
             std::to_string(violated);
  return o;
}

Outcome theorem4_radius_three() {
  Outcome o;
  std::size_t eligible = 0, violated = 0;
  bool saw_c6 = false;
  const CanonicalForm c6 = canonical_form(cycle_graph(6));
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& line : levels()[n]) {
      const Graph g = parse_graph6(line);
      const DistanceMatrix d(g);
      const MetricProfile p = metric_profile(d);
      if (p.radius != 3 || p.diameter > 4) continue;
      ++eligible;
      saw_c6 |= line == c6;
      auto hit = find_geodesic_cycle(g, d, 6);
      if (!hit) hit = find_geodesic_cycle(g, d, 7);
      if (!hit || !is_geodesic_cycle(g, hit->cycle)) ++violated;
    }
  }
  o.pass = violated == 0 && eligible > 0 && saw_c6;
  o.detail = std::to_string(eligible) + " graphs with n<=7, rad=3, diam<=4; violated=" +
             std::to_string(violated);
  return o;
}

Outcome tightness() {
  Outcome o;
  for (std::size_t r = 3; r <= 8; ++r) {
    const Graph g = tightness_witness(r);
    const DistanceMatrix d(g);
    const MetricProfile p = metric_profile(d);
    const auto c = circumference(g);
    std::size_t at_three = 0;
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = a + 1; b < g.order(); ++b) {
        if (g.degree(a) == 1 && g.degree(b) == 1 && d(a, b) == 3) ++at_three;
      }
    }
    const bool ok = g.order() == 3 * r - 1 && p.radius == r && p.diameter <= 2 * r - 2 && c &&
                    c->length() == 2 * r - 1 && at_three == 1 &&
                    !find_geodesic_cycle(g, d, 2 * r) && !find_geodesic_cycle(g, d, 2 * r + 1);
    if (!ok) {
      o.pass = false;
      o.detail += " bad(r=" + std::to_string(r) + ")";
    }
  }
  o.detail = "r=3..8" + o.detail;
  return o;
}

Outcome corollary3_sweep() {
  Outcome o;
  const CliResult r = cli({"verify", "--claim", "cor3", "--max-n", "8"});
  const auto j = nlohmann::json::parse(r.out);
  const std::size_t violated = j["violated"];
  o.pass = r.code == 0 && violated == 0 && j["graphs_checked"] == 12113;
  o.detail = "graphs_checked=" + std::to_string(j["graphs_checked"].get<std::size_t>()) +
             " holds=" + std::to_string(j["holds"].get<std::size_t>()) +
             " violated=" + std::to_string(violated);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t graphs = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto reps = oracle::connected_classes(n);
    std::vector<std::string> mapped;
    for (const Graph& g : reps) mapped.push_back(canonical_form(g));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != levels()[n]) ++mismatches;
    for (const Graph& g : graphs_of(n)) {
      ++graphs;
      const auto c = circumference(g);
      if ((c ? c->length() : 0) != oracle::circumference(g)) ++mismatches;
    }
  }
  o.pass = mismatches == 0 && levels()[7].size() == 853;
  o.detail = std::to_string(graphs) + " graphs, mismatches=" + std::to_string(mismatches);
  return o;
}

bool metric_axioms(const Graph& g) {
  const DistanceMatrix d(g);
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (d(u, u) != 0) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) != d(v, u)) return false;
      for (Vertex w = 0; w < n; ++w) {
        if (d(u, w) > d(u, v) + d(v, w)) return false;
      }
    }
  }
  const MetricProfile p = metric_profile(d);
  return p.radius <= p.diameter && p.diameter <= 2 * p.radius;
}

bool witnesses_validate(const Graph& g) {
  const auto c = circumference(g);
  if (!c) return !cycle_at_least(g, 3) && !longest_geodesic_cycle(g);
  if (!is_valid_cycle(g, c->cycle)) return false;
  const auto at = cycle_at_least(g, c->length());
  if (!at || !is_valid_cycle(g, at->cycle)) return false;
  const auto geo = longest_geodesic_cycle(g);
  return geo && geo->geodesic && is_geodesic_cycle(g, geo->cycle);
}

Outcome property_suites() {
  Outcome o;
  std::size_t failures = 0;
  std::mt19937_64 rng(2026);

  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& line : levels()[n]) {
      const Graph g = parse_graph6(line);
      if (to_graph6(g) != line || parse_graph6(to_graph6(g)) != g) ++failures;
      if (!metric_axioms(g) || !witnesses_validate(g)) ++failures;
      if (n <= 6) {
        for (int t = 0; t < 100; ++t) {
          if (canonical_form(permute(g, oracle::random_permutation(n, rng))) != line) ++failures;
        }
      }
    }
  }
  std::vector<std::size_t> picks(levels()[8].size());
  std::iota(picks.begin(), picks.end(), 0);
  std::shuffle(picks.begin(), picks.end(), rng);
  picks.resize(1000);
  for (std::size_t i : picks) {
    const std::string& line = levels()[8][i];
    const Graph g = parse_graph6(line);
    for (int t = 0; t < 100; ++t) {
      if (canonical_form(permute(g, oracle::random_permutation(8, rng))) != line) ++failures;
    }
    if (!metric_axioms(g) || !witnesses_validate(g)) ++failures;
  }
  o.pass = failures == 0;
  o.detail = "failures=" + std::to_string(failures);
  return o;
}

}  // namespace
}  // namespace cyclebound

int main() {
  using namespace cyclebound;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 extremal family exactness", extremal_family},
      {"2 thm1 exhaustive sweep n<=9", theorem1_sweep},
      {"3 rad 3 / diam 4 forces a cycle of length >= 4 (n<=9)", rad3_diam4_has_long_cycle},
      {"4 thm4 sweep at r=3 (n<=7)", theorem4_radius_three},
      {"5 tightness of 3r-2 (r=3..8)", tightness},
      {"6 cor3 sweep n<=8", corollary3_sweep},
      {"7 oracle equivalence n<=7", oracle_equivalence},
      {"8 property suites", property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
