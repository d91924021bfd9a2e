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

#ifndef KDIVERSE_MINCUT_H_
#define KDIVERSE_MINCUT_H_

#include <cstdint>
#include <istream>
#include <vector>

#include "kdiverse/diverse.h"
#include "kdiverse/flow.h"
#include "kdiverse/poset.h"
#include "kdiverse/ring_family.h"

namespace kdiverse {

// Unit-capacity digraph with terminals. Arc i is ground element i; parallel
// arcs and self-loops are kept as distinct elements.
struct Digraph {
  int num_vertices = 0;
  int source = 0;
  int sink = 1;
  std::vector<Arc> arcs;
};

// Throws InvalidArgumentError for bad terminals or endpoints.
void ValidateDigraph(const Digraph& g);

// DIMACS max-flow text: `p max n m`, `n id s|t`, `a u v [cap]`, `c ...`.
// Ids are 1-based in the file and 0-based in the result. Capacities are
// ignored. Throws ParseError naming the line.
Digraph ParseDimacs(std::istream& in);

// Picard-Queyranne condensation of the residual graph of a maximum flow.
// component_of[v] is 0 for R(s'), 1 for R(t') and 2.. for the remaining
// strongly connected components. Arcs join interior components and follow
// residual arcs, so closed sets are down-sets.
struct PqDag {
  std::vector<int> component_of;
  int num_components = 2;
  std::vector<Arc> arcs;
};

struct PqResult {
  PqDag dag;
  Flow flow;  // per digraph arc; self-loops carry 0
  int64_t q = 0;
};

PqResult BuildPq(const Digraph& g);

BlockPartition PqPartition(const PqDag& dag);

// r(a) = (tail, head) when a carries flow, (t, t) otherwise.
PreReductionMap MinCutPreReduction(const Flow& f, const Digraph& g);

// True when `cut` has q arcs and removing it separates t from s.
bool IsMinimumCut(const Digraph& g, const std::vector<ElementId>& cut,
                  int64_t q);

struct DiverseMinCut {
  DiverseResult result;
  int64_t q = 0;
  int interior_components = 0;
};

// Every returned cut is checked with IsMinimumCut (InternalError otherwise).
DiverseMinCut SolveDiverseMinCut(const Digraph& g, int k,
                                 const Measure& measure, Backend backend,
                                 const DumpRequest& dumps = {});

}  // namespace kdiverse

#endif  // KDIVERSE_MINCUT_H_
