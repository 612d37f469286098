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


#include "cyclebound/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cyclebound/constructions.h"
#include "cyclebound/enumeration.h"
#include "cyclebound/verify.h"

namespace cyclebound {
namespace {

template <typename T>
std::string cell(const std::optional<T>& value) {
  return value ? std::to_string(*value) : "-";
}

int analyze(const std::string& input, std::istream& in, std::ostream& out) {
  std::ifstream file;
  std::istream* source = &in;
  if (input != "-") {
    file.open(input);
    if (!file) throw Error("cannot open graph6 file '" + input + "'");
    source = &file;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*source, line)) {
    ++line_no;
    Graph g = [&] {
      try {
        return parse_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset(),
                         line_no);
      }
    }();
    const GraphSummary s = summarize(g);
    out << to_graph6(g) << '\t' << s.order << '\t' << cell(s.radius) << '\t'
        << cell(s.diameter) << '\t' << cell(s.circumference) << '\t'
        << cell(s.longest_geodesic) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact radius, diameter and circumference tools and claim verification"};
  app.name("cyclebound");
  app.require_subcommand(1);

  std::string analyze_input = "-";
  auto* analyze_cmd = app.add_subcommand("analyze", "Per-graph TSV: graph6 n rad diam c geo");
  analyze_cmd->add_option("--input", analyze_input, "graph6 file, or - for stdin");

  auto* construct_cmd = app.add_subcommand("construct", "Emit a constructed graph as graph6");
  construct_cmd->require_subcommand(1);
  std::size_t n = 0, m = 0, k = 0, t = 0, r = 0, d = 0;
  auto* cycle_cmd = construct_cmd->add_subcommand("cycle", "Cycle C_n");
  cycle_cmd->add_option("--n", n)->required();
  auto* sun_cmd = construct_cmd->add_subcommand("sun", "Sun-graph S_{m,k}");
  sun_cmd->add_option("--m", m)->required();
  sun_cmd->add_option("--k", k)->required();
  auto* extremal_cmd =
      construct_cmd->add_subcommand("extremal", "Radius r, diameter d, circumference 4r-2d");
  extremal_cmd->add_option("--r", r)->required();
  extremal_cmd->add_option("--d", d)->required();
  auto* witness_cmd =
      construct_cmd->add_subcommand("witness", "Order 3r-1 graph without long geodesic cycles");
  witness_cmd->add_option("--r", r)->required();
  auto* multisun_cmd =
      construct_cmd->add_subcommand("multisun", "C_m with t rays of length k per vertex");
  multisun_cmd->add_option("--m", m)->required();
  multisun_cmd->add_option("--k", k)->required();
  multisun_cmd->add_option("--t", t)->required();

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Sorted graph6 of every connected class on n vertices");
  enumerate_cmd->add_option("--n", n)->required();

  std::string claim_text;
  std::size_t max_n = 0;
  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep a claim; JSON summary");
  verify_cmd->add_option("--claim", claim_text)
      ->required()
      ->check(CLI::IsMember({"thm1", "cor3", "thm4"}));
  auto* max_n_opt = verify_cmd->add_option("--max-n", max_n);
  auto* input_opt = verify_cmd->add_option("--input", verify_input);
  max_n_opt->excludes(input_opt);
  verify_cmd->require_option(2);

  std::size_t cap = kDefaultMinimalOrderCap;
  auto* minorder_cmd =
      app.add_subcommand("minorder", "Minimal order of a graph with radius r, diameter d");
  minorder_cmd->add_option("--r", r)->required();
  minorder_cmd->add_option("--d", d)->required();
  minorder_cmd->add_option("--cap", cap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cyclebound: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return analyze(analyze_input, in, out);

    if (*construct_cmd) {
      Graph g = [&] {
        if (*cycle_cmd) return cycle_graph(n);
        if (*sun_cmd) return sun_graph({m, k});
        if (*extremal_cmd) return extremal_graph(r, d);
        if (*witness_cmd) return tightness_witness(r);
        return multi_sun(m, k, t);
      }();
      out << to_graph6(g) << '\n';
      return kExitOk;
    }

    if (*enumerate_cmd) {
      for (const auto& line : connected_graph6(n)) out << line << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      const Claim claim = *parse_claim(claim_text);
      const VerificationReport report =
          *max_n_opt ? verify_range(claim, max_n) : verify_file(claim, verify_input);
      out << report_json(report) << '\n';
      return report.violated == 0 ? kExitOk : kExitViolations;
    }

    if (*minorder_cmd) {
      out << minimal_order_json(
                 minimal_order_search(static_cast<Hops>(r), static_cast<Hops>(d), cap))
          << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "cyclebound: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cyclebound
