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

#ifndef KDIVERSE_MCF_BACKEND_H_
#define KDIVERSE_MCF_BACKEND_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdiverse/convex.h"
#include "kdiverse/flow.h"
#include "kdiverse/framework.h"

namespace kdiverse {

// ---------------------------------------------------------------------------
// Min-cost-flow route.
//
// The network has the instance vertices plus one auxiliary vertex (id
// num_vertices()). Each weighted arc becomes |B_k(phi)| parallel copies whose
// costs are the breakpoints b_0..b_z; each zero-weight arc and each auxiliary
// arc (aux, v) for interior v becomes two copies with costs 0 and k. The
// optimal flow's dual potential, shifted so the auxiliary vertex sits at 0,
// is a minimum k-potential once restricted to the instance vertices.
// ---------------------------------------------------------------------------

struct McfArcRole {
  enum class Kind {
    kWeightedCopy,   // copy `copy` of instance arc `source`
    kZeroWeightCopy, // copy `copy` (0 or 1) of instance arc `source`
    kAuxInterior,    // copy `copy` of (aux, source) for an interior vertex
    kAuxBottom,      // (aux, bottom)
    kAuxTop,         // (aux, top)
  };
  Kind kind;
  int source = -1;
  int copy = 0;
};

struct McfReduction {
  FlowNetwork network{0};
  int64_t big_m = 0;
  int aux_vertex = 0;
  std::vector<McfArcRole> provenance;
};

// Default M = sum_a w(a) phi(k) + 1 unless `big_m` is given. Throws
// InvalidArgumentError on overflow or if a capacity would go negative.
McfReduction BuildMcf(const KPotentialInstance& inst,
                      std::optional<int64_t> big_m = std::nullopt);

PotentialSolution SolveMinKPotentialMcf(const KPotentialInstance& inst);

// JSON dump of (network, costs, capacities, demands, provenance).
std::string McfToJson(const McfReduction& reduction);

}  // namespace kdiverse

#endif  // KDIVERSE_MCF_BACKEND_H_
