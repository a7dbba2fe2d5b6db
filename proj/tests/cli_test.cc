// Copyright 2026 The nashfrag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nashfrag_cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace nashfrag::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

TEST(Cli, SolvePrisonersDilemma) {
  const CliRun r = run({"solve", "--builtin", "prisoners_dilemma"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("equilibrium: (D,D)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("residual: 0\n"), std::string::npos) << r.out;

  const Json j = run_json({"solve", "--builtin", "prisoners_dilemma"});
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["result"]["residual"], 0.0);
  EXPECT_EQ(j["result"]["profile"]["pure"]["strategies"], Json({2, 2}));
  EXPECT_EQ(j["result"]["profile"]["pure"]["names"], Json({"D", "D"}));
}

TEST(Cli, FragilityPrisonersDilemma) {
  const CliRun r = run({"fragility", "--builtin", "prisoners_dilemma", "--kmax", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("classification: C1-dependent"), std::string::npos);
  EXPECT_NE(r.out.find("k*: 2"), std::string::npos);
  EXPECT_NE(r.out.find("moves to (C,C)"), std::string::npos) << r.out;

  const Json j =
      run_json({"fragility", "--builtin", "prisoners_dilemma", "--kmax", "2"});
  EXPECT_EQ(j["result"]["classification"], "C1-dependent");
  EXPECT_EQ(j["result"]["k_star"], 2);
  EXPECT_EQ(j["result"]["witness"]["coalition"], Json({1, 2}));
  EXPECT_EQ(j["result"]["witness"]["names"], Json({"C", "C"}));
  EXPECT_EQ(j["result"]["witness"]["gains"], Json({2.0, 2.0}));
}

TEST(Cli, FragilityNeedsKmax) {
  EXPECT_EQ(run({"fragility", "--builtin", "prisoners_dilemma"}).code, 2);
  EXPECT_EQ(
      run({"fragility", "--builtin", "prisoners_dilemma", "--kmax", "3"}).code, 2);
}

TEST(Cli, FragilityOfNonEquilibriumIsDomainFailure) {
  const CliRun r = run({"fragility", "--builtin", "prisoners_dilemma", "--kmax", "2",
                     "--profile", "C,C"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, MatchingPenniesRobustWithMixedSearch) {
  const Json j = run_json({"fragility", "--builtin", "matching_pennies", "--kmax",
                           "2", "--mixed", "--seed", "3"});
  EXPECT_EQ(j["result"]["classification"], "coalition-robust");
  EXPECT_TRUE(j["result"]["witness"].is_null());
  EXPECT_TRUE(j["result"]["mixed_witness"].is_null());
  EXPECT_EQ(j["inputs"]["seed"], 3);
}

TEST(Cli, MissingGameFileExitsTwo) {
  const CliRun r = run({"verify", "--game", "missing.game", "--profile", "1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.game"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, MalformedGameFileExitsTwo) {
  const CliRun r = run({"info", "--game",
                     NASHFRAG_CORPUS_DIR "/malformed/missing_payoff_value.game"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", "--builtin", "nope"}).code, 2);
  EXPECT_EQ(run({"solve", "--builtin", "public_goods", "--param", "rate"}).code, 2);
  EXPECT_EQ(run({"solve", "--builtin", "prisoners_dilemma", "--tol", "-1"}).code, 2);
  EXPECT_EQ(run({"verify", "--builtin", "prisoners_dilemma", "--profile", "1,3"}).code,
            2);
  EXPECT_EQ(run({"verify", "--builtin", "prisoners_dilemma", "--profile",
                 "0.5,0.6;1,0"}).code,
            2);
  EXPECT_EQ(run({"dynamics", "--builtin", "prisoners_dilemma", "--regime", "c3",
                 "--start", "1,1"}).code,
            2);
}

TEST(Cli, HelpAndVersionExitZero) {
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("fragility"), std::string::npos);
  const CliRun version = run({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_NE(version.out.find(std::string(kVersion)), std::string::npos);
}

TEST(Cli, VerifyPureAndMixed) {
  EXPECT_EQ(run({"verify", "--builtin", "prisoners_dilemma", "--profile", "2,2"}).code,
            0);
  const CliRun cc = run({"verify", "--builtin", "prisoners_dilemma", "--profile", "C,C"});
  EXPECT_EQ(cc.code, 1);
  EXPECT_NE(cc.out.find("residual: 2"), std::string::npos) << cc.out;
  EXPECT_EQ(run({"verify", "--builtin", "rock_paper_scissors", "--profile",
                 "1/3,1/3,1/3;1/3,1/3,1/3"}).code,
            0);
  EXPECT_EQ(run({"verify", "--builtin", "matching_pennies", "--profile",
                 "0.6,0.4;0.5,0.5", "--tol", "0.5"}).code,
            0);
  EXPECT_EQ(run({"verify", "--builtin", "matching_pennies", "--profile",
                 "0.6,0.4;0.5,0.5"}).code,
            1);
}

TEST(Cli, ZeroSumValue) {
  const Json j = run_json({"zerosum-value", "--builtin", "zero_sum", "--param",
                           "matrix=3,1;0,2"});
  EXPECT_NEAR(j["result"]["value"].get<double>(), 1.5, 1e-12);
  EXPECT_LE(j["result"]["gap"].get<double>(), 1e-9);
  EXPECT_EQ(run({"zerosum-value", "--builtin", "prisoners_dilemma"}).code, 1);
}

TEST(Cli, CoopGainPrisonersDilemma) {
  const Json j = run_json({"coop-gain", "--builtin", "prisoners_dilemma"});
  EXPECT_EQ(j["result"]["best_welfare_gap"], 4.0);
  ASSERT_EQ(j["result"]["pareto_improvers"].size(), 1u);
  EXPECT_EQ(j["result"]["pareto_improvers"][0]["names"], Json({"C", "C"}));
  EXPECT_EQ(j["result"]["base"]["method"], "pure-enumeration");
}

TEST(Cli, DynamicsRegimes) {
  const Json c1 = run_json({"dynamics", "--builtin", "prisoners_dilemma", "--regime",
                            "c1", "--start", "C,C"});
  EXPECT_EQ(c1["result"]["terminal"], "absorbed");
  EXPECT_EQ(c1["result"]["states"].back()["names"], Json({"D", "D"}));
  EXPECT_LE(c1["result"]["sweeps"].get<int>(), 2);

  const Json c2 = run_json({"dynamics", "--builtin", "prisoners_dilemma", "--regime",
                            "c2", "--start", "D,D", "--kmax", "2"});
  EXPECT_EQ(c2["result"]["terminal"], "cycle");
  EXPECT_EQ(c2["result"]["states"][1]["names"], Json({"C", "C"}));
  EXPECT_EQ(c2["result"]["movers"][0], Json({1, 2}));

  const CliRun text = run({"dynamics", "--builtin", "battle_of_sexes", "--regime", "c2",
                        "--start", "B,B"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("terminal: absorbed at state 0"), std::string::npos)
      << text.out;
}

TEST(Cli, InfoAndPureNash) {
  const Json info = run_json({"info", "--builtin", "public_goods"});
  EXPECT_EQ(info["result"]["players"], 3);
  EXPECT_EQ(info["result"]["profiles"], 8);
  EXPECT_EQ(info["result"]["zero_sum"], false);
  const Json eq = run_json({"pure-nash", "--builtin", "battle_of_sexes"});
  EXPECT_EQ(eq["result"]["count"], 2);
}

TEST(Cli, JsonIsDeterministic) {
  const std::vector<std::vector<std::string>> invocations = {
      {"solve", "--builtin", "random", "--param", "sizes=3x3x3", "--param", "seed=9",
       "--seed", "5", "--json"},
      {"fragility", "--builtin", "public_goods", "--kmax", "3", "--mixed", "--json"},
      {"dynamics", "--builtin", "random", "--param", "sizes=3x3", "--regime", "c2",
       "--start", "1,1", "--random-order", "--seed", "11", "--json"},
  };
  for (const auto& args : invocations) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace nashfrag::cli
