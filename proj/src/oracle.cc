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

#include "kdiverse/oracle.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kdiverse/errors.h"

namespace kdiverse::oracle {

SetFamily EnumMinCuts(const Digraph& g) {
  ValidateDigraph(g);
  const int n = g.num_vertices;
  if (n > 20) throw TooLargeError("EnumMinCuts: more than 20 vertices");
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v) {
    if (v != g.source && v != g.sink) free_vertices.push_back(v);
  }
  SetFamily best;
  std::set<std::vector<ElementId>> seen;
  size_t best_size = SIZE_MAX;
  const uint32_t limit = 1u << free_vertices.size();
  std::vector<bool> in_x(n);
  for (uint32_t mask = 0; mask < limit; ++mask) {
    std::fill(in_x.begin(), in_x.end(), false);
    in_x[g.source] = true;
    for (size_t i = 0; i < free_vertices.size(); ++i) {
      if (mask >> i & 1) in_x[free_vertices[i]] = true;
    }
    std::vector<ElementId> cut;
    for (size_t a = 0; a < g.arcs.size(); ++a) {
      if (in_x[g.arcs[a].tail] && !in_x[g.arcs[a].head]) {
        cut.push_back(static_cast<ElementId>(a));
      }
    }
    if (cut.size() < best_size) {
      best_size = cut.size();
      best.clear();
      seen.clear();
    }
    if (cut.size() == best_size && seen.insert(cut).second) {
      best.push_back(cut);
    }
  }
  return best;
}

std::vector<Matching> EnumStableMatchings(const SmInstance& inst) {
  const int n = inst.n();
  if (n > 6) throw TooLargeError("EnumStableMatchings: n > 6");
  std::vector<Matching> out;
  Matching m(n);
  std::iota(m.begin(), m.end(), 0);
  do {
    std::vector<int> husband(n);
    for (int u = 0; u < n; ++u) husband[m[u]] = u;
    bool stable = true;
    for (int u = 0; u < n && stable; ++u) {
      for (int v = 0; v < n; ++v) {
        // u likes v better than m[u], and v likes u better than husband[v].
        auto pos = [](const std::vector<int>& list, int x) {
          return std::find(list.begin(), list.end(), x) - list.begin();
        };
        if (pos(inst.pref_u(u), v) < pos(inst.pref_u(u), m[u]) &&
            pos(inst.pref_v(v), u) < pos(inst.pref_v(v), husband[v])) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

int64_t TupleDiversity(const SetFamily& tuple, const Measure& measure) {
  const size_t k = tuple.size();
  switch (measure.kind) {
    case MeasureKind::kSum: {
      int64_t total = 0;
      for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
          std::vector<ElementId> diff;
          std::set_symmetric_difference(tuple[i].begin(), tuple[i].end(),
                                        tuple[j].begin(), tuple[j].end(),
                                        std::back_inserter(diff));
          total += static_cast<int64_t>(diff.size());
        }
      }
      return total;
    }
    case MeasureKind::kCov: {
      std::set<ElementId> all;
      for (const auto& s : tuple) all.insert(s.begin(), s.end());
      return static_cast<int64_t>(all.size());
    }
    case MeasureKind::kTable: {
      std::map<ElementId, int> count;
      for (const auto& s : tuple) {
        for (ElementId e : s) ++count[e];
      }
      int64_t total = 0;
      for (auto [e, c] : count) total += measure.table->table().at(c);
      return -total;
    }
  }
  throw InternalError("unknown measure");
}

Report BestKTuple(const SetFamily& solutions, int k, const Measure& measure) {
  if (solutions.empty()) throw InvalidArgumentError("no solutions");
  if (k < 1) throw InvalidArgumentError("k must be at least 1");
  double total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<double>(solutions.size());
  if (total > 1e6) throw TooLargeError("BestKTuple: more than 10^6 tuples");

  const int s = static_cast<int>(solutions.size());
  std::vector<int> idx(k, 0);
  Report best;
  bool first = true;
  SetFamily tuple(k);
  while (true) {
    for (int i = 0; i < k; ++i) tuple[i] = solutions[idx[i]];
    int64_t d = TupleDiversity(tuple, measure);
    if (first || d > best.optimum) {
      best.optimum = d;
      best.tuple = idx;
      best.count = 1;
      first = false;
    } else if (d == best.optimum) {
      ++best.count;
    }
    int i = k - 1;
    while (i >= 0 && ++idx[i] == s) idx[i--] = 0;
    if (i < 0) break;
  }
  return best;
}

int64_t BruteH(const KPotential& p, const KPotentialInstance& inst) {
  int64_t h = 0;
  for (const WeightedArc& a : inst.arcs()) {
    h += a.weight * inst.convex().Eval(p.values[a.head] - p.values[a.tail]);
  }
  return h;
}

std::vector<KPotential> EnumPotentials(const KPotentialInstance& inst) {
  const int n = inst.num_vertices();
  const int k = inst.k();
  double total = 1;
  for (int v = 2; v < n; ++v) total *= k + 1;
  if (total > 1e6) throw TooLargeError("EnumPotentials: too many labelings");

  std::vector<KPotential> out;
  KPotential p{std::vector<int>(n, 0)};
  p.values[kBottom] = k;
  while (true) {
    bool ok = true;
    for (const WeightedArc& a : inst.arcs()) {
      if (p.values[a.tail] > p.values[a.head]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
    int v = n - 1;
    while (v >= 2 && ++p.values[v] > k) p.values[v--] = 0;
    if (v < 2) break;
  }
  return out;
}

BruteOptimum BruteMinKPotential(const KPotentialInstance& inst) {
  std::vector<KPotential> all = EnumPotentials(inst);
  if (all.empty()) throw InternalError("no valid potential");
  BruteOptimum best{all.front(), BruteH(all.front(), inst)};
  for (const KPotential& p : all) {
    int64_t h = BruteH(p, inst);
    if (h < best.h) best = {p, h};
  }
  return best;
}

std::vector<Ideal> EnumIdeals(const PosetDag& poset) {
  const int m = poset.num_interior();
  if (m > 20) throw TooLargeError("EnumIdeals: more than 20 interior vertices");
  std::vector<Ideal> out;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    auto in = [&](VertexId v) {
      return poset.IsInterior(v) && (mask >> (v - 2) & 1);
    };
    bool closed = true;
    for (const Arc& a : poset.arcs()) {
      if (in(a.tail) && poset.IsInterior(a.head) && !in(a.head)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    Ideal ideal;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) ideal.members.push_back(i + 2);
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace kdiverse::oracle
