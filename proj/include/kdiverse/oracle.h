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

#ifndef KDIVERSE_ORACLE_H_
#define KDIVERSE_ORACLE_H_

#include <cstdint>
#include <vector>

#include "kdiverse/diverse.h"
#include "kdiverse/framework.h"
#include "kdiverse/mincut.h"
#include "kdiverse/poset.h"
#include "kdiverse/stable_matching.h"
#include "kdiverse/total_orders.h"

// Exhaustive reference implementations. Deliberately naive; each scan has a
// size guard that raises TooLargeError.
namespace kdiverse::oracle {

using SetFamily = std::vector<std::vector<ElementId>>;

// All distinct minimum cuts Delta+(X) over s in X, t not in X, as sorted arc
// id sets in first-seen order. Needs at most 20 vertices.
SetFamily EnumMinCuts(const Digraph& g);

// All n! matchings filtered by the blocking-pair definition. n <= 6.
std::vector<Matching> EnumStableMatchings(const SmInstance& inst);

struct Report {
  int64_t optimum = 0;
  std::vector<int> tuple;  // indexes into the solution list
  int64_t count = 0;       // number of optimal ordered tuples
};

// Ordered k-tuples with repetition; at most 10^6 of them.
Report BestKTuple(const SetFamily& solutions, int k, const Measure& measure);

// Diversity of the given tuple, computed from scratch.
int64_t TupleDiversity(const SetFamily& tuple, const Measure& measure);

// Every potential satisfying P1-P3, at most 10^6 candidate labelings.
std::vector<KPotential> EnumPotentials(const KPotentialInstance& inst);

struct BruteOptimum {
  KPotential potential;
  int64_t h = 0;
};
BruteOptimum BruteMinKPotential(const KPotentialInstance& inst);

// sum over arcs of w * phi(p(head) - p(tail)), no validation.
int64_t BruteH(const KPotential& p, const KPotentialInstance& inst);

// All ideals of the interior, each sorted. At most 20 interior vertices.
std::vector<Ideal> EnumIdeals(const PosetDag& poset);

}  // namespace kdiverse::oracle

#endif  // KDIVERSE_ORACLE_H_
