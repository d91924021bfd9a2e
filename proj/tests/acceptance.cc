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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every reference value comes from exhaustive search.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "kdiverse/cut_backend.h"
#include "kdiverse/diverse.h"
#include "kdiverse/flow.h"
#include "kdiverse/framework.h"
#include "kdiverse/mcf_backend.h"
#include "kdiverse/mincut.h"
#include "kdiverse/oracle.h"
#include "kdiverse/ring_family.h"
#include "kdiverse/stable_matching.h"
#include "kdiverse/total_orders.h"

namespace kdiverse {
namespace {

using SetFamily = oracle::SetFamily;

// Collects the first few mismatches of one criterion.
class Tally {
 public:
  void Check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << " [" << what() << "]";
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failures" << notes_.str();
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string Where(int iter, int k, const Measure& m, Backend b) {
  std::ostringstream s;
  s << "instance " << iter << " k=" << k << " " << m.Name() << " "
    << BackendName(b);
  return s.str();
}

// Compares both backends with the exhaustive optimum over `all`.
void CompareRoutes(Tally& t, int iter, const SetFamily& all,
                   const std::function<DiverseResult(int, const Measure&,
                                                     Backend)>& solve) {
  for (int k = 1; k <= 3; ++k) {
    for (const Measure& m : {Measure::Sum(), Measure::Cov()}) {
      const int64_t want = oracle::BestKTuple(all, k, m).optimum;
      for (Backend b : {Backend::kMcf, Backend::kCut}) {
        DiverseResult r = solve(k, m, b);
        const int64_t got = r.diversity;
        // The reported tuple must consist of feasible solutions.
        bool feasible = true;
        for (const auto& s : r.tuple.sets) {
          feasible = feasible &&
                     std::find(all.begin(), all.end(), s) != all.end();
        }
        t.Check(got == want && feasible, [&] {
          return Where(iter, k, m, b) + ": got " + std::to_string(got) +
                 ", want " + std::to_string(want);
        });
      }
    }
  }
}

Tally Criterion1() {
  Tally t;
  std::mt19937_64 rng(1001);
  for (int iter = 0; iter < 300; ++iter) {
    Digraph g = testing::RandomDigraph(rng, 4, 7, 5, 12);
    CompareRoutes(t, iter, oracle::EnumMinCuts(g),
                  [&](int k, const Measure& m, Backend b) {
                    return SolveDiverseMinCut(g, k, m, b).result;
                  });
  }
  return t;
}

Tally Criterion2() {
  Tally t;
  std::mt19937_64 rng(2002);
  for (int iter = 0; iter < 200; ++iter) {
    SmInstance inst = testing::RandomSm(rng, 2 + iter % 3);
    CompareRoutes(t, iter, testing::SetsOf(oracle::EnumStableMatchings(inst)),
                  [&](int k, const Measure& m, Backend b) {
                    return SolveDiverseSm(inst, k, m, b).result;
                  });
  }
  return t;
}

Tally Criterion3() {
  Tally t;
  std::mt19937_64 rng(3003);
  for (int iter = 0; iter < 100; ++iter) {
    const int k = 1 + iter % 3;
    PosetDag poset = testing::RandomPoset(rng, iter % 5);
    ReductionMap r = testing::RandomMap(rng, poset, rng() % 7);
    ConvexSpec phi = testing::RandomConvex(rng, k);
    KPotentialInstance inst = KPotentialInstance::Build(poset, r, phi, k);
    for (const KPotential& p : oracle::EnumPotentials(inst)) {
      const int64_t h = HValue(p, inst);
      const int64_t d = DPhiStar(SolutionsFromPotential(p, inst), phi);
      t.Check(h == d && h == oracle::BruteH(p, inst), [&] {
        return "instance " + std::to_string(iter) + ": H=" +
               std::to_string(h) + " d*=" + std::to_string(d);
      });
    }
    const int64_t brute = oracle::BruteMinKPotential(inst).h;
    const int64_t mcf = SolveMinKPotentialMcf(inst).h;
    t.Check(mcf == brute, [&] {
      return "instance " + std::to_string(iter) + ": mcf " +
             std::to_string(mcf) + " vs " + std::to_string(brute);
    });
    if (phi.kind() == ConvexKind::kBinom || phi.kind() == ConvexKind::kCov) {
      const int64_t cut = SolveMinKPotentialCut(inst).h;
      t.Check(cut == brute, [&] {
        return "instance " + std::to_string(iter) + ": cut " +
               std::to_string(cut) + " vs " + std::to_string(brute);
      });
    }
  }
  return t;
}

Digraph LargeDigraph(std::mt19937_64& rng, int n, int m) {
  Digraph g;
  g.num_vertices = n;
  g.source = 0;
  g.sink = n - 1;
  std::uniform_int_distribution<int> vd(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int u = vd(rng), v = vd(rng);
    while (v == u) v = vd(rng);
    g.arcs.push_back({u, v});
  }
  return g;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Tally Criterion4(int instances) {
  Tally t;
  std::mt19937_64 rng(4004);
  double slowest = 0;
  for (int iter = 0; iter < instances; ++iter) {
    Digraph g = LargeDigraph(rng, 2000, 10000);
    for (const Measure& m : {Measure::Sum(), Measure::Cov()}) {
      int64_t values[2];
      int i = 0;
      for (Backend b : {Backend::kMcf, Backend::kCut}) {
        auto start = std::chrono::steady_clock::now();
        DiverseMinCut r = SolveDiverseMinCut(g, 8, m, b);
        const double secs = Seconds(start);
        if (iter == 0 && b == Backend::kCut) {
          std::cout << "  instance 0 " << m.Name() << ": q=" << r.q
                    << " interior blocks=" << r.interior_components
                    << " reduced vertices=" << r.result.instance_vertices
                    << " arcs=" << r.result.instance_arcs << "\n";
        }
        slowest = std::max(slowest, secs);
        values[i++] = r.result.diversity;
        t.Check(secs < 30.0, [&] {
          return Where(iter, 8, m, b) + " took " + std::to_string(secs) + "s";
        });
      }
      t.Check(values[0] == values[1], [&] {
        return Where(iter, 8, m, Backend::kMcf) + ": mcf " +
               std::to_string(values[0]) + " vs cut " +
               std::to_string(values[1]);
      });
    }
  }
  std::cout << "  slowest solve " << slowest << "s\n";
  return t;
}

std::set<std::vector<ElementId>> FromIdeals(const BlockPartition& part,
                                            const ReductionMap& r) {
  std::set<std::vector<ElementId>> out;
  for (const Ideal& ideal : oracle::EnumIdeals(part.block_poset)) {
    out.insert(SupR(ideal, r, part.block_poset));
  }
  return out;
}

// P-set of a matching: for every u, the partners u likes at least as much.
std::vector<bool> PSet(const SmInstance& inst, const Matching& m) {
  const int n = inst.n();
  std::vector<bool> p(n * (n + 1), false);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      p[PairRingElement(n, u, v)] = inst.rank_u(u, v) <= inst.rank_u(u, m[u]);
    }
  }
  return p;
}

Tally Criterion5() {
  Tally t;

  // (a) ideals of the PQ poset are exactly the minimum cuts; suite 1.
  std::mt19937_64 rng(1001);
  for (int iter = 0; iter < 300; ++iter) {
    Digraph g = testing::RandomDigraph(rng, 4, 7, 5, 12);
    PqResult pq = BuildPq(g);
    BlockPartition part = PqPartition(pq.dag);
    ReductionMap r = Lift(MinCutPreReduction(pq.flow, g), part);
    auto from_ideals = FromIdeals(part, r);
    bool all_min = true;
    for (const auto& cut : from_ideals) all_min = all_min && IsMinimumCut(g, cut, pq.q);
    auto cuts = oracle::EnumMinCuts(g);
    t.Check(all_min && from_ideals == std::set(cuts.begin(), cuts.end()),
            [&] { return "a: digraph " + std::to_string(iter); });
  }

  // (b) ideals of the rotation poset are exactly the stable matchings, and
  // (c) P-sets are closed under union and intersection; suite 2.
  rng.seed(2002);
  for (int iter = 0; iter < 200; ++iter) {
    SmInstance inst = testing::RandomSm(rng, 2 + iter % 3);
    RotationPoset rp = BuildRotationPoset(inst);
    BlockPartition part = RotationPartition(inst, rp);
    ReductionMap r = Lift(SmPreReduction(inst), part);
    auto brute = testing::SetsOf(oracle::EnumStableMatchings(inst));
    t.Check(FromIdeals(part, r) == std::set(brute.begin(), brute.end()),
            [&] { return "b: matching instance " + std::to_string(iter); });

    std::set<std::vector<bool>> family;
    for (const auto& m : oracle::EnumStableMatchings(inst)) {
      family.insert(PSet(inst, m));
    }
    bool closed = true;
    for (const auto& a : family) {
      for (const auto& b : family) {
        std::vector<bool> cap(a.size()), cup(a.size());
        for (size_t x = 0; x < a.size(); ++x) {
          cap[x] = a[x] && b[x];
          cup[x] = a[x] || b[x];
        }
        closed = closed && family.count(cap) && family.count(cup);
      }
    }
    t.Check(closed, [&] { return "c: P-sets of " + std::to_string(iter); });
  }

  // (d) max-flow value equals the capacity of the cut it certifies, on the
  // layered cut networks.
  // (e) min-cost flows leave no negative residual cycle.
  rng.seed(5005);
  for (int iter = 0; iter < 150; ++iter) {
    const int k = 1 + iter % 4;
    PosetDag poset = testing::RandomPoset(rng, iter % 6);
    ReductionMap r = testing::RandomMap(rng, poset, rng() % 9);
    ConvexSpec phi = iter % 2 ? ConvexSpec::Cov() : ConvexSpec::Binom();
    KPotentialInstance inst = KPotentialInstance::Build(poset, r, phi, k);

    CutReduction cut = BuildCut(inst);
    MaxFlowResult mf = MaxFlow(cut.network, cut.source(), cut.sink());
    std::vector<bool> side =
        MinCutSide(cut.network, mf.flow, cut.source(), cut.sink());
    t.Check(CutCapacity(cut.network, side) == mf.value,
            [&] { return "d: network " + std::to_string(iter); });

    McfReduction mcf = BuildMcf(KPotentialInstance::Build(
        poset, r, testing::RandomConvex(rng, k), k));
    Flow f = MinCostBFlow(mcf.network);
    t.Check(!HasNegativeCycle(ResidualGraph::Of(mcf.network, f)),
            [&] { return "e: network " + std::to_string(iter); });
  }
  return t;
}

// Cut route with binom against mcf route with x^2, under sum, on the
// instances of criterion 1.
Tally Criterion6() {
  Tally t;
  std::mt19937_64 rng(1001);
  for (int iter = 0; iter < 300; ++iter) {
    Digraph g = testing::RandomDigraph(rng, 4, 7, 5, 12);
    for (int k = 1; k <= 3; ++k) {
      DiverseResult cut =
          SolveDiverseMinCut(g, k, Measure::Sum(), Backend::kCut).result;
      DiverseResult mcf =
          SolveDiverseMinCut(g, k, Measure::Sum(), Backend::kMcf).result;
      t.Check(DSum(cut.tuple) == DSum(mcf.tuple), [&] {
        return "instance " + std::to_string(iter) + " k=" + std::to_string(k) +
               ": " + std::to_string(DSum(cut.tuple)) + " vs " +
               std::to_string(DSum(mcf.tuple));
      });
    }
  }
  return t;
}

Tally Criterion7() {
  Tally t;
  std::mt19937_64 rng(7007);
  for (int iter = 0; iter < 50; ++iter) {
    ProductLattice lat = testing::RandomLattice(rng);
    SetFamily all;
    for (const auto& x : lat.members()) all.push_back(lat.AsSet(x));
    CompareRoutes(t, iter, all, [&](int k, const Measure& m, Backend b) {
      return SolveDiverseLattice(lat, k, m, b).result;
    });
  }
  return t;
}

}  // namespace
}  // namespace kdiverse

int main(int argc, char** argv) {
  using namespace kdiverse;
  // Optional argument: number of large instances for criterion 4.
  const int large = argc > 1 ? std::atoi(argv[1]) : 20;
  std::vector<std::function<Tally()>> criteria = {
      Criterion1, Criterion2, Criterion3, [large] { return Criterion4(large); },
      Criterion5, Criterion6, Criterion7};
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    std::string error;
    try {
      t = criteria[i]();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && t.ok();
    all = all && ok;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL")
              << " (" << (error.empty() ? t.Summary() : "error: " + error)
              << ")" << std::endl;
  }
  return all ? 0 : 1;
}
