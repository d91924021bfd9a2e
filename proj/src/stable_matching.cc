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

#include "kdiverse/stable_matching.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "kdiverse/errors.h"

namespace kdiverse {
namespace {

std::vector<std::vector<int>> Ranks(const std::vector<std::vector<int>>& pref,
                                    int n, const char* side) {
  std::vector<std::vector<int>> rank(pref.size(), std::vector<int>(n, -1));
  for (size_t a = 0; a < pref.size(); ++a) {
    if (static_cast<int>(pref[a].size()) != n) {
      throw InvalidArgumentError(std::string(side) + " list " +
                                 std::to_string(a) + " has wrong length");
    }
    for (int i = 0; i < n; ++i) {
      int b = pref[a][i];
      if (b < 0 || b >= n || rank[a][b] >= 0) {
        throw InvalidArgumentError(std::string(side) + " list " +
                                   std::to_string(a) +
                                   " is not a permutation");
      }
      rank[a][b] = i;
    }
  }
  return rank;
}

}  // namespace

SmInstance SmInstance::Create(std::vector<std::vector<int>> pref_u,
                              std::vector<std::vector<int>> pref_v) {
  const int n = static_cast<int>(pref_u.size());
  if (n < 1) throw InvalidArgumentError("instance needs n >= 1");
  if (static_cast<int>(pref_v.size()) != n) {
    throw InvalidArgumentError("sides have different sizes");
  }
  SmInstance inst;
  inst.rank_u_ = Ranks(pref_u, n, "U");
  inst.rank_v_ = Ranks(pref_v, n, "V");
  inst.pref_u_ = std::move(pref_u);
  inst.pref_v_ = std::move(pref_v);
  return inst;
}

SmInstance ParsePreferences(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        return std::istringstream(line);
      }
    }
    throw ParseError(line_no, "unexpected end of file");
  };
  long n = 0;
  {
    auto ls = next_line();
    if (!(ls >> n) || n < 1) throw ParseError(line_no, "expected n >= 1");
  }
  std::vector<std::vector<int>> lists[2];
  for (int side = 0; side < 2; ++side) {
    for (long a = 0; a < n; ++a) {
      auto ls = next_line();
      std::vector<int> list;
      std::vector<bool> seen(n, false);
      long id;
      while (ls >> id) {
        if (id < 1 || id > n || seen[id - 1]) {
          throw ParseError(line_no, "preference list is not a permutation");
        }
        seen[id - 1] = true;
        list.push_back(static_cast<int>(id - 1));
      }
      if (!ls.eof()) throw ParseError(line_no, "non-numeric token");
      if (static_cast<long>(list.size()) != n) {
        throw ParseError(line_no, "expected " + std::to_string(n) + " ids");
      }
      lists[side].push_back(std::move(list));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(line_no, "trailing content");
    }
  }
  return SmInstance::Create(std::move(lists[0]), std::move(lists[1]));
}

Matching GaleShapley(const SmInstance& inst, Side proposing) {
  const int n = inst.n();
  const bool by_u = proposing == Side::kU;
  // Proposer p, receiver r; held[r] = proposer currently held.
  std::vector<int> next(n, 0), held(n, -1), free;
  for (int p = n - 1; p >= 0; --p) free.push_back(p);
  while (!free.empty()) {
    int p = free.back();
    free.pop_back();
    int r = by_u ? inst.pref_u(p)[next[p]++] : inst.pref_v(p)[next[p]++];
    auto prefers = [&](int a, int b) {
      return by_u ? inst.rank_v(r, a) < inst.rank_v(r, b)
                  : inst.rank_u(r, a) < inst.rank_u(r, b);
    };
    if (held[r] < 0) {
      held[r] = p;
    } else if (prefers(p, held[r])) {
      free.push_back(held[r]);
      held[r] = p;
    } else {
      free.push_back(p);
    }
  }
  Matching m(n);
  for (int r = 0; r < n; ++r) {
    if (by_u) {
      m[held[r]] = r;
    } else {
      m[r] = held[r];
    }
  }
  if (FindBlockingPair(inst, m)) {
    throw InternalError("deferred acceptance returned an unstable matching");
  }
  return m;
}

std::optional<std::pair<int, int>> FindBlockingPair(const SmInstance& inst,
                                                    const Matching& m) {
  const int n = inst.n();
  std::vector<int> partner_of_v(n, -1);
  for (int u = 0; u < n; ++u) partner_of_v[m[u]] = u;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (inst.rank_u(u, v) < inst.rank_u(u, m[u]) &&
          inst.rank_v(v, u) < inst.rank_v(v, partner_of_v[v])) {
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

RotationPoset BuildRotationPoset(const SmInstance& inst) {
  const int n = inst.n();
  RotationPoset out;
  out.u_optimal = GaleShapley(inst, Side::kU);
  out.v_optimal = GaleShapley(inst, Side::kV);

  Matching m = out.u_optimal;
  std::vector<int> partner_of_v(n);
  for (int u = 0; u < n; ++u) partner_of_v[m[u]] = u;

  // History of each v: (rotation, new partner) in elimination order.
  std::vector<std::vector<std::pair<int, int>>> history(n);
  // Rotation whose block holds (u, v), -1 if none.
  std::vector<std::vector<int>> block_owner(n, std::vector<int>(n, -1));

  while (true) {
    // s_M(u): first v after m[u] in u's list preferring u to its partner.
    std::vector<int> succ(n, -1);
    for (int u = 0; u < n; ++u) {
      for (int i = inst.rank_u(u, m[u]) + 1; i < n; ++i) {
        int v = inst.pref_u(u)[i];
        if (inst.rank_v(v, u) < inst.rank_v(v, partner_of_v[v])) {
          succ[u] = v;
          break;
        }
      }
    }
    // Walk u -> partner of s_M(u) until a dead end or a repeat.
    std::vector<int> cycle;
    std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 finished
    for (int start = 0; start < n && cycle.empty(); ++start) {
      if (state[start] != 0) continue;
      std::vector<int> walk;
      int u = start;
      while (u >= 0 && state[u] == 0) {
        state[u] = 1;
        walk.push_back(u);
        u = succ[u] < 0 ? -1 : partner_of_v[succ[u]];
      }
      if (u >= 0 && state[u] == 1) {
        auto it = std::find(walk.begin(), walk.end(), u);
        cycle.assign(it, walk.end());
      }
      for (int w : walk) state[w] = 2;
    }
    if (cycle.empty()) break;

    const int id = static_cast<int>(out.rotations.size());
    Rotation rho;
    std::vector<std::pair<int, int>> block;
    for (int u : cycle) rho.pairs.push_back({u, m[u]});
    for (int u : cycle) {
      for (int i = inst.rank_u(u, m[u]) + 1; i <= inst.rank_u(u, succ[u]);
           ++i) {
        int v = inst.pref_u(u)[i];
        block.push_back({u, v});
        block_owner[u][v] = id;
      }
    }
    for (int u : cycle) {
      int v = succ[u];
      m[u] = v;
      partner_of_v[v] = u;
      history[v].push_back({id, u});
    }
    out.rotations.push_back(std::move(rho));
    out.blocks.push_back(std::move(block));
  }
  if (m != out.v_optimal) {
    throw InternalError("rotation elimination did not reach the V-optimum");
  }

  // Precedence. Rule 1: the rotation that moved u_i to v_i comes first.
  // Rule 2: for v strictly between v_i and v_{i+1} in u_i's list, the
  // rotation that moved v from below u_i to above u_i comes first.
  std::vector<int> first_partner(n);
  for (int u = 0; u < n; ++u) first_partner[out.u_optimal[u]] = u;
  for (int id = 0; id < static_cast<int>(out.rotations.size()); ++id) {
    const auto& pairs = out.rotations[id].pairs;
    const int c = static_cast<int>(pairs.size());
    for (int i = 0; i < c; ++i) {
      auto [u, vi] = pairs[i];
      int vnext = pairs[(i + 1) % c].second;
      if (block_owner[u][vi] >= 0) {
        out.precedence.push_back({block_owner[u][vi], id});
      }
      for (int r = inst.rank_u(u, vi) + 1; r < inst.rank_u(u, vnext); ++r) {
        int v = inst.pref_u(u)[r];
        int prev = first_partner[v];
        for (auto [rot, partner] : history[v]) {
          if (inst.rank_v(v, prev) > inst.rank_v(v, u) &&
              inst.rank_v(v, partner) < inst.rank_v(v, u)) {
            out.precedence.push_back({rot, id});
            break;
          }
          prev = partner;
        }
      }
    }
  }
  std::sort(out.precedence.begin(), out.precedence.end());
  out.precedence.erase(
      std::unique(out.precedence.begin(), out.precedence.end()),
      out.precedence.end());
  return out;
}

BlockPartition RotationPartition(const SmInstance& inst,
                                 const RotationPoset& poset) {
  const int n = inst.n();
  std::vector<int> block_of(n * (n + 1), 1);
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i <= inst.rank_u(u, poset.u_optimal[u]); ++i) {
      block_of[PairRingElement(n, u, inst.pref_u(u)[i])] = 0;
    }
  }
  for (size_t id = 0; id < poset.blocks.size(); ++id) {
    for (auto [u, v] : poset.blocks[id]) {
      block_of[PairRingElement(n, u, v)] = static_cast<int>(id) + 2;
    }
  }
  std::vector<Arc> arcs;
  for (auto [before, after] : poset.precedence) {
    arcs.push_back({after + 2, before + 2});
  }
  return MakeBlockPartition(std::move(block_of),
                            static_cast<int>(poset.rotations.size()) + 2,
                            std::move(arcs));
}

PreReductionMap SmPreReduction(const SmInstance& inst) {
  const int n = inst.n();
  PreReductionMap pre(n * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      int r = inst.rank_u(u, v);
      int below = r + 1 < n ? inst.pref_u(u)[r + 1] : n;
      pre[PairElement(n, u, v)] = {PairRingElement(n, u, v),
                                   PairRingElement(n, u, below)};
    }
  }
  return pre;
}

Matching MatchingFromSet(const SmInstance& inst,
                         const std::vector<ElementId>& set) {
  const int n = inst.n();
  Matching m(n, -1);
  for (ElementId e : set) {
    if (e < 0 || e >= n * n || m[e / n] >= 0) {
      throw InternalError("element set is not a matching");
    }
    m[e / n] = e % n;
  }
  std::vector<bool> used(n, false);
  for (int v : m) {
    if (v < 0 || used[v]) throw InternalError("element set is not a matching");
    used[v] = true;
  }
  return m;
}

std::vector<ElementId> SetFromMatching(const Matching& m) {
  const int n = static_cast<int>(m.size());
  std::vector<ElementId> set;
  for (int u = 0; u < n; ++u) set.push_back(PairElement(n, u, m[u]));
  return set;
}

DiverseSm SolveDiverseSm(const SmInstance& inst, int k, const Measure& measure,
                         Backend backend, const DumpRequest& dumps) {
  RotationPoset rp = BuildRotationPoset(inst);
  BlockPartition part = RotationPartition(inst, rp);
  ReductionMap r = Lift(SmPreReduction(inst), part);

  DiverseSm out;
  out.result = SolveDiverse(part.block_poset, r, measure, backend, k, dumps);
  out.num_rotations = static_cast<int>(rp.rotations.size());
  for (const auto& set : out.result.tuple.sets) {
    Matching m = MatchingFromSet(inst, set);
    if (FindBlockingPair(inst, m)) {
      throw InternalError("returned matching is not stable");
    }
    out.matchings.push_back(std::move(m));
  }
  return out;
}

}  // namespace kdiverse
