// Copyright 2026 The kdiverse Authors
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

#include "kdiverse/cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace kdiverse::cli {
namespace {

using nlohmann::json;

std::string Data(const std::string& name) {
  return std::string(KDIVERSE_TESTDATA_DIR) + "/" + name;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::initializer_list<std::string> args) {
  std::vector<std::string> owned = {"kdiverse"};
  owned.insert(owned.end(), args);
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, MinCutSumOnDiamond) {
  Outcome o = Call({"mincut", "--k", "2", "--measure", "sum", Data("g1.dimacs")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["diversity"], 4);
  EXPECT_EQ(doc["q"], 2);
  EXPECT_EQ(doc["backend"], "cut");
  EXPECT_EQ(doc["solutions"].size(), 2u);
  EXPECT_EQ(doc["stats"]["ground_size"], 4);
  for (const json& cut : doc["solutions"]) {
    for (const json& arc : cut) {
      EXPECT_GE(arc.get<int>(), 1);
      EXPECT_LE(arc.get<int>(), 4);
    }
  }
}

TEST(CliTest, SingleSolutionHasNoDiversity) {
  Outcome o = Call({"mincut", "--k", "1", Data("g1.dimacs")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(json::parse(o.out)["diversity"], 0);
}

TEST(CliTest, OutputIsDeterministic) {
  auto run = [] {
    json doc = json::parse(
        Call({"sm", "--k", "3", "--measure", "cov", Data("sm1.pref")}).out);
    doc["stats"].erase("solve_ms");
    return doc;
  };
  EXPECT_EQ(run(), run());
}

TEST(CliTest, McfBackendAgrees) {
  Outcome o = Call({"mincut", "--k", "2", "--backend", "mcf", Data("g1.dimacs")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["backend"], "mcf");
  EXPECT_EQ(doc["diversity"], 4);
}

TEST(CliTest, StableMatchingCov) {
  Outcome o = Call({"sm", "--k", "2", "--measure", "cov", Data("sm1.pref")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["diversity"], 4);
  // Pairs are 1-based [u, v].
  for (const json& m : doc["solutions"]) {
    ASSERT_EQ(m.size(), 2u);
    for (const json& pair : m) {
      EXPECT_GE(pair[0].get<int>(), 1);
      EXPECT_LE(pair[1].get<int>(), 2);
    }
  }
}

TEST(CliTest, LatticeEchoesLabels) {
  Outcome o = Call({"lattice", "--k", "2", Data("chain3.json")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["diversity"], 2);
  for (const json& s : doc["solutions"]) {
    for (const json& label : s) {
      int v = label.get<int>();
      EXPECT_TRUE(v == 10 || v == 20 || v == 30) << v;
    }
  }
}

TEST(CliTest, TableMeasureUsesMcf) {
  Outcome o = Call({"mincut", "--k", "2", "--measure",
                    "table:" + Data("square4.table"), Data("g1.dimacs")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["backend"], "mcf");
  // Two disjoint cuts: every arc used once, phi(1) = 0.
  EXPECT_EQ(doc["diversity"], 0);
}

TEST(CliTest, TableWithCutBackendIsConfigError) {
  Outcome o = Call({"mincut", "--k", "2", "--backend", "cut", "--measure",
                    "table:" + Data("square4.table"), Data("g1.dimacs")});
  EXPECT_EQ(o.code, kExitConfig);
}

TEST(CliTest, TableTooShortForK) {
  Outcome o = Call({"mincut", "--k", "5", "--measure",
                    "table:" + Data("square4.table"), Data("g1.dimacs")});
  EXPECT_EQ(o.code, kExitConfig);
}

TEST(CliTest, NonConvexTableIsParseError) {
  Outcome o = Call({"mincut", "--k", "2", "--measure",
                    "table:" + Data("bad.table"), Data("g1.dimacs")});
  EXPECT_EQ(o.code, kExitParse);
}

TEST(CliTest, BadInputs) {
  EXPECT_EQ(Call({"mincut", "--k", "2", Data("missing.dimacs")}).code,
            kExitParse);
  EXPECT_EQ(Call({"sm", "--k", "2", Data("g1.dimacs")}).code, kExitParse);
  EXPECT_EQ(Call({"mincut", "--k", "0", Data("g1.dimacs")}).code,
            kExitConfig);
  EXPECT_EQ(Call({"mincut", "--k", "2", "--measure", "max",
                  Data("g1.dimacs")}).code,
            kExitConfig);
  EXPECT_EQ(Call({"mincut", "--k", "2", "--backend", "lp",
                  Data("g1.dimacs")}).code,
            kExitConfig);
  EXPECT_EQ(Call({"mincut", Data("g1.dimacs")}).code, kExitConfig);
  EXPECT_EQ(Call({}).code, kExitConfig);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

TEST(CliTest, OracleReport) {
  Outcome o = Call({"oracle", "--problem", "mincut", "--k", "2",
                    Data("g1.dimacs")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["diversity"], 4);
  EXPECT_EQ(doc["num_solutions"], 4);
  EXPECT_GE(doc["optimal_tuples"].get<int>(), 1);
}

TEST(CliTest, SelftestAgrees) {
  struct Case {
    std::string problem, measure, k, file;
    int value;
  };
  for (const Case& c : std::vector<Case>{
           {"mincut", "sum", "2", "g1.dimacs", 4},
           {"sm", "cov", "3", "sm1.pref", 4},
           {"mincut", "cov", "2", "g2.dimacs", 2},
           {"lattice", "sum", "3", "chain3.json", 6}}) {
    Outcome o = Call({"selftest", "--problem", c.problem, "--k", c.k,
                      "--measure", c.measure, Data(c.file)});
    ASSERT_EQ(o.code, kExitOk) << c.problem << " " << o.err;
    json doc = json::parse(o.out);
    EXPECT_TRUE(doc["agree"].get<bool>());
    EXPECT_EQ(doc["optimum"]["oracle"], c.value) << c.problem;
  }
}

TEST(CliTest, DumpsAreWritten) {
  std::string mcf = ::testing::TempDir() + "kdiverse_dump.json";
  std::string cut = ::testing::TempDir() + "kdiverse_dump.dot";
  Outcome o = Call({"mincut", "--k", "2", "--dump-mcf", mcf, "--dump-cut", cut,
                    "--output", ::testing::TempDir() + "kdiverse_out.json",
                    Data("g1.dimacs")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream m(mcf);
  EXPECT_NO_THROW(json::parse(m));
  std::ifstream c(cut);
  std::string first;
  std::getline(c, first);
  EXPECT_NE(first.find("digraph"), std::string::npos);
  std::remove(mcf.c_str());
  std::remove(cut.c_str());
}

}  // namespace
}  // namespace kdiverse::cli
