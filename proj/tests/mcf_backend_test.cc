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

#include "kdiverse/mcf_backend.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.h"
#include "json.hpp"
#include "kdiverse/errors.h"
#include "kdiverse/oracle.h"

namespace kdiverse {
namespace {

using testing::G2Map;
using testing::G2Poset;
using Kind = McfArcRole::Kind;

// One element spanning bottom..top, `copies` times.
KPotentialInstance Spanning(ConvexSpec phi, int k, int copies = 1) {
  PosetDag p = PosetDag::Create(2, {{kTop, kBottom}});
  std::vector<ElementImage> images(copies, {kBottom, kTop});
  return KPotentialInstance::Build(p, ReductionMap::Create(p, images), phi, k);
}

std::vector<std::pair<int64_t, int64_t>> CopiesOf(const McfReduction& red,
                                                  Kind kind, int source) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int i = 0; i < red.network.num_arcs(); ++i) {
    if (red.provenance[i].kind == kind && red.provenance[i].source == source) {
      out.push_back({red.network.arc(i).cost, red.network.arc(i).capacity});
    }
  }
  return out;
}

TEST(BuildMcf, CovCopies) {
  McfReduction red = BuildMcf(Spanning(ConvexSpec::Cov(), 3));
  const int64_t m = red.big_m;
  EXPECT_EQ(m, 3);  // w phi(3) + 1
  // Arc 0 is the structural (top, bottom); arc 1 carries the element.
  EXPECT_EQ(CopiesOf(red, Kind::kWeightedCopy, 1),
            (std::vector<std::pair<int64_t, int64_t>>{
                {0, m}, {1, 1}, {3, m - 1}}));
  EXPECT_EQ(CopiesOf(red, Kind::kZeroWeightCopy, 0),
            (std::vector<std::pair<int64_t, int64_t>>{{0, m}, {3, m}}));
}

TEST(BuildMcf, ZeroWeightCopiesAtK2) {
  McfReduction red = BuildMcf(Spanning(ConvexSpec::Square(), 2));
  EXPECT_EQ(CopiesOf(red, Kind::kZeroWeightCopy, 0),
            (std::vector<std::pair<int64_t, int64_t>>{{0, red.big_m},
                                                      {2, red.big_m}}));
}

TEST(BuildMcf, PathDemands) {
  PosetDag p = G2Poset();
  KPotentialInstance inst =
      KPotentialInstance::Build(p, G2Map(p), ConvexSpec::Square(), 2);
  McfReduction red = BuildMcf(inst);
  const int64_t m = 9;
  EXPECT_EQ(red.big_m, m);
  const auto& d = red.network.demands();
  EXPECT_EQ(d[red.aux_vertex], 3 * m);
  EXPECT_EQ(d[kBottom], -3 * m);
  EXPECT_EQ(d[kTop], m);
  EXPECT_EQ(d[2], -m);
  EXPECT_EQ(std::accumulate(d.begin(), d.end(), int64_t{0}), 0);
  EXPECT_EQ(CopiesOf(red, Kind::kAuxInterior, 2).size(), 2u);
  EXPECT_EQ(CopiesOf(red, Kind::kAuxBottom, kBottom),
            (std::vector<std::pair<int64_t, int64_t>>{{2, 2 * m}}));
  EXPECT_EQ(CopiesOf(red, Kind::kAuxTop, kTop),
            (std::vector<std::pair<int64_t, int64_t>>{{0, 2 * m}}));
}

TEST(BuildMcf, SmallMOverride) {
  KPotentialInstance inst = Spanning(ConvexSpec::Square(), 3);
  EXPECT_THROW(BuildMcf(inst, 2), InvalidArgumentError);
  EXPECT_EQ(BuildMcf(inst, 100).big_m, 100);
}

TEST(BuildMcf, JsonDump) {
  McfReduction red = BuildMcf(Spanning(ConvexSpec::Cov(), 3));
  auto doc = nlohmann::json::parse(McfToJson(red));
  EXPECT_EQ(doc["big_m"], red.big_m);
  EXPECT_EQ(doc["arcs"].size(), static_cast<size_t>(red.network.num_arcs()));
  EXPECT_EQ(doc["arcs"][2]["role"], "weighted_copy");
}

TEST(SolveMinKPotentialMcf, Examples) {
  PosetDag p = G2Poset();
  KPotentialInstance g2 =
      KPotentialInstance::Build(p, G2Map(p), ConvexSpec::Square(), 2);
  PotentialSolution s = SolveMinKPotentialMcf(g2);
  EXPECT_EQ(s.h, 2);
  EXPECT_EQ(s.potential.values[2], 1);

  KPotentialInstance empty = KPotentialInstance::Build(
      p, ReductionMap::Create(p, {}), ConvexSpec::Square(), 3);
  EXPECT_EQ(SolveMinKPotentialMcf(empty).h, 0);

  EXPECT_EQ(SolveMinKPotentialMcf(Spanning(ConvexSpec::Square(), 3)).h, 9);
}

// Copy capacities are nonnegative and the middle copies telescope.
TEST(McfProperty, CapacityLayout) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const int k = 1 + iter % 6;
    ConvexSpec phi = testing::RandomConvex(rng, k);
    KPotentialInstance inst = Spanning(phi, k, 1 + iter % 3);
    McfReduction red = BuildMcf(inst);
    BreakpointProfile prof = BreakpointsK(phi, k);
    auto copies = CopiesOf(red, Kind::kWeightedCopy, 1);
    ASSERT_EQ(copies.size(), prof.points.size());
    int64_t middle = 0;
    for (size_t j = 0; j < copies.size(); ++j) {
      EXPECT_GE(copies[j].second, 0);
      EXPECT_EQ(copies[j].first, prof.points[j]);
      if (j > 0 && j + 1 < copies.size()) middle += copies[j].second;
    }
    const int64_t w = inst.arcs()[1].weight;
    EXPECT_EQ(middle, w * (prof.last_slope - prof.first_slope));
  }
}

// Optimum equals exhaustive search; the potential is valid.
TEST(McfProperty, MatchesBruteForce) {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 1 + iter % 3;
    PosetDag poset = testing::RandomPoset(rng, iter % 5);
    ReductionMap r = testing::RandomMap(rng, poset, rng() % 7);
    KPotentialInstance inst = KPotentialInstance::Build(
        poset, r, testing::RandomConvex(rng, k), k);
    PotentialSolution s = SolveMinKPotentialMcf(inst);
    EXPECT_FALSE(ValidatePotential(s.potential, inst));
    EXPECT_EQ(s.h, HValue(s.potential, inst));
    EXPECT_EQ(s.h, oracle::BruteMinKPotential(inst).h) << "iteration " << iter;
  }
}

// Linear phi has no interior breakpoint: two copies per weighted arc.
TEST(McfProperty, LinearTablesMatchBruteForce) {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    const int k = 1 + iter % 4;
    const int64_t slope = iter % 3;
    std::vector<int64_t> table(k + 1);
    for (int x = 0; x <= k; ++x) table[x] = slope * x;
    ConvexSpec phi = ConvexSpec::FromTable(table);
    ASSERT_EQ(BreakpointsK(phi, k).points.size(), 2u);
    PosetDag poset = testing::RandomPoset(rng, iter % 5);
    ReductionMap r = testing::RandomMap(rng, poset, 1 + rng() % 6);
    KPotentialInstance inst = KPotentialInstance::Build(poset, r, phi, k);
    PotentialSolution s = SolveMinKPotentialMcf(inst);
    EXPECT_FALSE(ValidatePotential(s.potential, inst));
    EXPECT_EQ(s.h, oracle::BruteMinKPotential(inst).h) << "iteration " << iter;
  }
}

}  // namespace
}  // namespace kdiverse
