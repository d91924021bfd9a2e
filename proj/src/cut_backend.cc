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

#include "kdiverse/cut_backend.h"

#include <sstream>
#include <string>

#include "kdiverse/errors.h"

namespace kdiverse {

CutReduction BuildCut(const KPotentialInstance& inst,
                      std::optional<int64_t> big_m) {
  const ConvexKind kind = inst.convex().kind();
  if (kind != ConvexKind::kBinom && kind != ConvexKind::kCov) {
    throw InvalidArgumentError("cut backend supports binom and cov only, got " +
                               inst.convex().Name());
  }
  const int n = inst.num_vertices();
  const int k = inst.k();
  int64_t m = 1;
  if (big_m) {
    m = *big_m;
  } else {
    const int64_t phi_k = inst.convex().Eval(k);
    for (const WeightedArc& a : inst.arcs()) {
      m = CheckedAdd(m, CheckedMul(a.weight, phi_k, "M"), "M");
    }
  }
  if (m < 1) throw InvalidArgumentError("M must be positive");

  CutReduction red;
  red.big_m = m;
  red.phi_kind = kind;
  red.k = k;
  red.num_instance_vertices = n;
  CheckedMul(k, n, "layered vertex count");
  red.network = FlowNetwork(k * n + 2);
  FlowNetwork& net = red.network;

  for (VertexId v = 0; v < n; ++v) {
    for (int i = 1; i < k; ++i) net.AddArc(red.Copy(v, i), red.Copy(v, i + 1), m);
  }
  red.layer_end = net.num_arcs();

  for (int i = 1; i <= k; ++i) {
    for (const WeightedArc& a : inst.arcs()) {
      net.AddArc(red.Copy(a.head, i), red.Copy(a.tail, i), m);
    }
    net.AddArc(red.Copy(kBottom, i), red.sink(), m);
    net.AddArc(red.source(), red.Copy(kTop, i), m);
  }
  red.structure_end = net.num_arcs();

  for (const WeightedArc& a : inst.arcs()) {
    if (a.weight == 0) continue;
    if (kind == ConvexKind::kBinom) {
      for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
          net.AddArc(red.Copy(a.tail, i), red.Copy(a.head, j), a.weight);
        }
      }
    } else {
      for (int i = 1; i < k; ++i) {
        net.AddArc(red.Copy(a.tail, i), red.Copy(a.head, i + 1), a.weight);
      }
    }
  }
  return red;
}

KPotential ExtractPotential(const std::vector<bool>& cut_side,
                            const KPotentialInstance& inst,
                            const CutReduction& reduction) {
  const FlowNetwork& net = reduction.network;
  if (static_cast<int>(cut_side.size()) != net.num_vertices() ||
      !cut_side[reduction.source()] || cut_side[reduction.sink()]) {
    throw InvalidArgumentError("cut side must contain s and exclude t");
  }
  const int64_t capacity = CutCapacity(net, cut_side);
  if (capacity >= reduction.big_m) {
    throw InternalError("cut capacity " + std::to_string(capacity) +
                        " reaches M = " + std::to_string(reduction.big_m));
  }
  KPotential p;
  p.values.assign(inst.num_vertices(), 0);
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    for (int i = reduction.k; i >= 1; --i) {
      if (!cut_side[reduction.Copy(v, i)]) {
        p.values[v] = i;
        break;
      }
    }
  }
  if (auto violation = ValidatePotential(p, inst)) {
    throw InternalError("cut does not encode a k-potential: " +
                        violation->ToString());
  }
  if (HValue(p, inst) != capacity) {
    throw InternalError("H of extracted potential differs from cut capacity");
  }
  return p;
}

PotentialSolution SolveMinKPotentialCut(const KPotentialInstance& inst) {
  const CutReduction red = BuildCut(inst);
  const MaxFlowResult flow = MaxFlow(red.network, red.source(), red.sink());
  const std::vector<bool> side =
      MinCutSide(red.network, flow.flow, red.source(), red.sink());
  PotentialSolution out;
  out.potential = ExtractPotential(side, inst, red);
  out.h = flow.value;
  return out;
}

std::string CutToDot(const CutReduction& reduction) {
  std::ostringstream dot;
  const int n = reduction.num_instance_vertices;
  dot << "digraph layered_cut {\n  rankdir=LR;\n";
  dot << "  s [shape=box];\n  t [shape=box];\n";
  for (int i = 1; i <= reduction.k; ++i) {
    dot << "  subgraph cluster_layer" << i << " {\n    label=\"layer " << i
        << "\";\n";
    for (VertexId v = 0; v < n; ++v) {
      dot << "    n" << reduction.Copy(v, i) << " [label=\"" << v << "^" << i
          << "\"];\n";
    }
    dot << "  }\n";
  }
  auto name = [&](int id) {
    if (id == reduction.source()) return std::string("s");
    if (id == reduction.sink()) return std::string("t");
    return "n" + std::to_string(id);
  };
  const FlowNetwork& net = reduction.network;
  for (int i = 0; i < net.num_arcs(); ++i) {
    const FlowArc& a = net.arc(i);
    const char* style = i < reduction.layer_end       ? "solid"
                        : i < reduction.structure_end ? "dotted"
                                                      : "bold";
    dot << "  " << name(a.tail) << " -> " << name(a.head) << " [style=" << style
        << ", label=\"" << a.capacity << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace kdiverse
