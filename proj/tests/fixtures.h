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

#ifndef KDIVERSE_TESTS_FIXTURES_H_
#define KDIVERSE_TESTS_FIXTURES_H_

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "kdiverse/convex.h"
#include "kdiverse/framework.h"
#include "kdiverse/mincut.h"
#include "kdiverse/poset.h"
#include "kdiverse/stable_matching.h"
#include "kdiverse/total_orders.h"

namespace kdiverse::testing {

// Diamond: s=0, a=1, b=2, t=3; arcs sa, sb, at, bt.
inline Digraph G1() { return {4, 0, 3, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}}; }

// Path: s=0, a=1, t=2; arcs sa, at.
inline Digraph G2() { return {3, 0, 2, {{0, 1}, {1, 2}}}; }

// The G2 block poset: bottom {s}, top {t}, one interior vertex m = 2.
inline PosetDag G2Poset() {
  return PosetDag::Create(3, {{kTop, 2}, {2, kBottom}});
}
// r(sa) = (bottom, m), r(at) = (m, top).
inline ReductionMap G2Map(const PosetDag& poset) {
  return ReductionMap::Create(poset, {{kBottom, 2}, {2, kTop}});
}

// u1: v1 > v2, u2: v2 > v1, v1: u2 > u1, v2: u1 > u2.
inline SmInstance Sm1() {
  return SmInstance::Create({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}});
}

// u_i ranks v_i, v_{i+1}, v_{i+2}; v_j ranks u_{j+1}, u_{j+2}, u_j.
inline SmInstance SmLatin3() {
  std::vector<std::vector<int>> pu(3), pv(3);
  for (int i = 0; i < 3; ++i) {
    pu[i] = {i, (i + 1) % 3, (i + 2) % 3};
    pv[i] = {(i + 1) % 3, (i + 2) % 3, i};
  }
  return SmInstance::Create(pu, pv);
}

inline Digraph RandomDigraph(std::mt19937_64& rng, int min_n, int max_n,
                             int min_m, int max_m) {
  std::uniform_int_distribution<int> nd(min_n, max_n), md(min_m, max_m);
  Digraph g;
  g.num_vertices = nd(rng);
  std::uniform_int_distribution<int> vd(0, g.num_vertices - 1);
  g.source = 0;
  g.sink = g.num_vertices - 1;
  const int m = md(rng);
  for (int i = 0; i < m; ++i) {
    int u = vd(rng), v = vd(rng);
    while (v == u) v = vd(rng);
    g.arcs.push_back({u, v});
  }
  return g;
}

inline SmInstance RandomSm(std::mt19937_64& rng, int n) {
  std::vector<std::vector<int>> pu(n), pv(n);
  for (int i = 0; i < n; ++i) {
    pu[i].resize(n);
    pv[i].resize(n);
    for (int j = 0; j < n; ++j) pu[i][j] = pv[i][j] = j;
    std::shuffle(pu[i].begin(), pu[i].end(), rng);
    std::shuffle(pv[i].begin(), pv[i].end(), rng);
  }
  return SmInstance::Create(pu, pv);
}

// Random points of a product of at most 3 orders of size at most 4, closed
// under meet and join.
inline ProductLattice RandomLattice(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qd(1, 3), sd(1, 4), cd(1, 4);
  std::vector<int> sizes(qd(rng));
  for (int& s : sizes) s = sd(rng);
  std::set<LatticePoint> pts;
  const int seeds = cd(rng);
  for (int i = 0; i < seeds; ++i) {
    LatticePoint x;
    for (int s : sizes) {
      x.push_back(std::uniform_int_distribution<int>(0, s - 1)(rng));
    }
    pts.insert(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<LatticePoint> cur(pts.begin(), pts.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        grew |= pts.insert(ProductLattice::Meet(a, b)).second;
        grew |= pts.insert(ProductLattice::Join(a, b)).second;
      }
    }
  }
  return ProductLattice::Create(sizes, {pts.begin(), pts.end()});
}

// Poset with `interior` interior vertices and random arcs between them,
// wired to the terminals.
inline PosetDag RandomPoset(std::mt19937_64& rng, int interior) {
  const int n = interior + 2;
  std::vector<Arc> arcs;
  std::vector<bool> has_in(n, false), has_out(n, false);
  std::bernoulli_distribution coin(0.4);
  for (int u = 2; u < n; ++u) {
    for (int v = 2; v < u; ++v) {
      if (coin(rng)) {
        arcs.push_back({u, v});
        has_out[u] = has_in[v] = true;
      }
    }
  }
  for (int v = 2; v < n; ++v) {
    if (!has_in[v]) arcs.push_back({kTop, v});
    if (!has_out[v]) arcs.push_back({v, kBottom});
  }
  if (interior == 0) arcs.push_back({kTop, kBottom});
  return PosetDag::Create(n, arcs);
}

// Elements with random comparable (plus, minus) pairs.
inline ReductionMap RandomMap(std::mt19937_64& rng, const PosetDag& poset,
                              int elements) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId hi = 0; hi < poset.num_vertices(); ++hi) {
    std::vector<bool> below = poset.Below(hi);
    for (VertexId lo = 0; lo < poset.num_vertices(); ++lo) {
      if (below[lo]) pairs.push_back({lo, hi});
    }
  }
  std::uniform_int_distribution<size_t> pick(0, pairs.size() - 1);
  std::vector<ElementImage> images;
  for (int e = 0; e < elements; ++e) {
    auto [lo, hi] = pairs[pick(rng)];
    images.push_back({lo, hi});
  }
  return ReductionMap::Create(poset, images);
}

// Square, binom, cov or a random convex table on [0, k].
inline ConvexSpec RandomConvex(std::mt19937_64& rng, int k) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return ConvexSpec::Square();
    case 1:
      return ConvexSpec::Binom();
    case 2:
      return ConvexSpec::Cov();
    default: {
      std::vector<int64_t> t{0};
      int64_t slope = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int x = 1; x <= k; ++x) {
        t.push_back(t.back() + slope);
        slope += std::uniform_int_distribution<int>(0, 2)(rng);
      }
      return ConvexSpec::FromTable(t);
    }
  }
}

inline std::vector<std::vector<ElementId>> SetsOf(
    const std::vector<Matching>& ms) {
  std::vector<std::vector<ElementId>> out;
  for (const auto& m : ms) out.push_back(SetFromMatching(m));
  return out;
}

}  // namespace kdiverse::testing

#endif  // KDIVERSE_TESTS_FIXTURES_H_
