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

#ifndef KDIVERSE_STABLE_MATCHING_H_
#define KDIVERSE_STABLE_MATCHING_H_

#include <istream>
#include <optional>
#include <utility>
#include <vector>

#include "kdiverse/diverse.h"
#include "kdiverse/poset.h"
#include "kdiverse/ring_family.h"

namespace kdiverse {

// Complete preference lists on both sides, 0-based ids, most preferred first.
class SmInstance {
 public:
  // Throws InvalidArgumentError unless every list is a permutation of 0..n-1.
  static SmInstance Create(std::vector<std::vector<int>> pref_u,
                           std::vector<std::vector<int>> pref_v);

  int n() const { return static_cast<int>(pref_u_.size()); }
  const std::vector<int>& pref_u(int u) const { return pref_u_[u]; }
  const std::vector<int>& pref_v(int v) const { return pref_v_[v]; }
  // 0 is the first choice.
  int rank_u(int u, int v) const { return rank_u_[u][v]; }
  int rank_v(int v, int u) const { return rank_v_[v][u]; }

 private:
  std::vector<std::vector<int>> pref_u_, pref_v_, rank_u_, rank_v_;
};

// Line 1: n. Then n U-side and n V-side permutations, 1-based ids, most
// preferred first. Throws ParseError naming the line.
SmInstance ParsePreferences(std::istream& in);

// partner[u] = v. Always indexed by the U side.
using Matching = std::vector<int>;

enum class Side { kU, kV };

// Deferred acceptance with `proposing` making offers. The result is checked
// for blocking pairs (InternalError).
Matching GaleShapley(const SmInstance& inst, Side proposing);

// A pair (u, v) both preferring each other to their partners, if any.
std::optional<std::pair<int, int>> FindBlockingPair(const SmInstance& inst,
                                                    const Matching& m);

struct Rotation {
  std::vector<std::pair<int, int>> pairs;  // (u_i, v_i); u_i moves to v_{i+1}
};

struct RotationPoset {
  Matching u_optimal;
  Matching v_optimal;
  std::vector<Rotation> rotations;  // in elimination order from u_optimal
  // (before, after): `before` must be eliminated first.
  std::vector<std::pair<int, int>> precedence;
  std::vector<std::vector<std::pair<int, int>>> blocks;  // d(rho)
};

RotationPoset BuildRotationPoset(const SmInstance& inst);

// Ground element of pair (u, v) is u*n + v. Ring element of (u, v) is
// u*(n+1) + v, with v = n standing for u's top.
inline int PairElement(int n, int u, int v) { return u * n + v; }
inline int PairRingElement(int n, int u, int v) { return u * (n + 1) + v; }

BlockPartition RotationPartition(const SmInstance& inst,
                                 const RotationPoset& poset);

// r(u, v) = ((u, v), (u, next choice of u after v, or top)).
PreReductionMap SmPreReduction(const SmInstance& inst);

Matching MatchingFromSet(const SmInstance& inst,
                         const std::vector<ElementId>& set);
std::vector<ElementId> SetFromMatching(const Matching& m);

struct DiverseSm {
  DiverseResult result;
  std::vector<Matching> matchings;
  int num_rotations = 0;
};

// Every returned matching is checked for stability (InternalError).
DiverseSm SolveDiverseSm(const SmInstance& inst, int k, const Measure& measure,
                         Backend backend, const DumpRequest& dumps = {});

}  // namespace kdiverse

#endif  // KDIVERSE_STABLE_MATCHING_H_
