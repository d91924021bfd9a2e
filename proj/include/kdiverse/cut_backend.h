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

#ifndef KDIVERSE_CUT_BACKEND_H_
#define KDIVERSE_CUT_BACKEND_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdiverse/convex.h"
#include "kdiverse/flow.h"
#include "kdiverse/framework.h"

namespace kdiverse {

// ---------------------------------------------------------------------------
// Min-cut route, for phi in {binom, cov}.
//
// k layers of the instance with arcs reversed; copy v^i of vertex v has id
// (i-1)*|V| + v, then s = k|V| and t = k|V|+1. A cut side X encodes
// p(v) = max{ i : i = 0 or v^i not in X }.
// ---------------------------------------------------------------------------

struct CutReduction {
  FlowNetwork network{0};
  int64_t big_m = 0;
  ConvexKind phi_kind = ConvexKind::kBinom;
  int k = 0;
  int num_instance_vertices = 0;
  // Arc-class boundaries: [0, layer_end) chain arcs, [layer_end, structure_end)
  // reversed structure and terminal arcs, the rest penalty arcs.
  int layer_end = 0;
  int structure_end = 0;

  int Copy(VertexId v, int layer) const {
    return (layer - 1) * num_instance_vertices + v;
  }
  int source() const { return k * num_instance_vertices; }
  int sink() const { return k * num_instance_vertices + 1; }
};

// Throws InvalidArgumentError unless the instance's phi is binom or cov.
CutReduction BuildCut(const KPotentialInstance& inst,
                      std::optional<int64_t> big_m = std::nullopt);

// Reads the k-potential off a source side X. Throws InternalError when the
// cut capacity reaches M or the result is not a k-potential whose H equals
// the cut capacity.
KPotential ExtractPotential(const std::vector<bool>& cut_side,
                            const KPotentialInstance& inst,
                            const CutReduction& reduction);

PotentialSolution SolveMinKPotentialCut(const KPotentialInstance& inst);

// Layered DOT rendering of the cut network.
std::string CutToDot(const CutReduction& reduction);

}  // namespace kdiverse

#endif  // KDIVERSE_CUT_BACKEND_H_
