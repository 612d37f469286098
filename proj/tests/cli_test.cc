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
#include <sstream>
#include <string>
#include <vector>

#include "cyclebound/constructions.h"
#include "cyclebound/enumeration.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace cyclebound {
namespace {

struct Invoke {
  int code;
  std::string out;
  std::string err;
};

Invoke run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, ConstructFamilies) {
  EXPECT_EQ(run({"construct", "cycle", "--n", "3"}).out, "Bw\n");
  EXPECT_EQ(run({"construct", "sun", "--m", "4", "--k", "1"}).out,
            to_graph6(sun_graph({4, 1})) + "\n");
  EXPECT_EQ(run({"construct", "extremal", "--r", "5", "--d", "7"}).out,
            to_graph6(sun_graph({6, 2})) + "\n");
  EXPECT_EQ(run({"construct", "witness", "--r", "5"}).out,
            to_graph6(tightness_witness(5)) + "\n");
  EXPECT_EQ(run({"construct", "multisun", "--m", "4", "--k", "1", "--t", "2"}).out,
            to_graph6(multi_sun(4, 1, 2)) + "\n");
}

TEST(Cli, ConstructErrorsExitTwo) {
  const Invoke bad = run({"construct", "extremal", "--r", "3", "--d", "5"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("vacuous"), std::string::npos);
  EXPECT_EQ(run({"construct", "cycle"}).code, kExitUsage);
  EXPECT_EQ(run({"construct"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}

TEST(Cli, AnalyzeFromStdin) {
  const std::string input = to_graph6(sun_graph({4, 1})) + "\n" + "Bw\n" + "B_\n" + "Cw\n";
  const Invoke r = run({"analyze"}, input);
  EXPECT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], to_graph6(sun_graph({4, 1})) + "\t8\t3\t4\t4\t4");
  EXPECT_EQ(rows[1], "Bw\t3\t1\t1\t3\t3");
  EXPECT_EQ(rows[2], "B_\t3\t-\t-\t-\t-");  // one edge and an isolated vertex
  EXPECT_EQ(rows[3], "Cw\t4\t-\t-\t3\t-");  // triangle and an isolated vertex
}

TEST(Cli, AnalyzeParseErrorNamesLine) {
  const Invoke r = run({"analyze", "--input", "-"}, "Bw\nB\n");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, EnumerateSortedClasses) {
  const Invoke r = run({"enumerate", "--n", "5"});
  EXPECT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.size(), 21u);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
  EXPECT_EQ(rows, connected_graph6(5));
  EXPECT_EQ(run({"enumerate", "--n", "11"}).code, kExitUsage);
}

TEST(Cli, VerifyReportsJsonAndExitsZero) {
  const Invoke r = run({"verify", "--claim", "thm1", "--max-n", "6"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["claim"], "thm1");
  EXPECT_EQ(j["graphs_checked"], 1 + 1 + 2 + 6 + 21 + 112);
  EXPECT_EQ(j["violated"], 0);

  const Invoke t4 = run({"verify", "--claim", "thm4", "--max-n", "7"});
  EXPECT_EQ(t4.code, kExitOk);
  EXPECT_GT(nlohmann::json::parse(t4.out)["holds"].get<int>(), 0);
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(run({"verify", "--claim", "thm9", "--max-n", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--claim", "thm1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--claim", "thm1", "--max-n", "4", "--input", "x"}).code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "--claim", "thm1", "--input", "/nonexistent.g6"}).code,
            kExitUsage);
}

TEST(Cli, MinOrder) {
  const auto j = nlohmann::json::parse(run({"minorder", "--r", "2", "--d", "2"}).out);
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["minimal_order"], 4);
  const auto u =
      nlohmann::json::parse(run({"minorder", "--r", "4", "--d", "8", "--cap", "6"}).out);
  EXPECT_EQ(u["status"], "undetermined");
  EXPECT_EQ(run({"minorder", "--r", "3", "--d", "7"}).code, kExitUsage);
}

TEST(Cli, Help) {
  const Invoke r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace cyclebound
