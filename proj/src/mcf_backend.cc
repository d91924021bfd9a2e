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

#include "kdiverse/mcf_backend.h"

#include <string>

#include "kdiverse/errors.h"
#include "json.hpp"

namespace kdiverse {
namespace {

int64_t DefaultBigM(const KPotentialInstance& inst) {
  const int64_t phi_k = inst.convex().Eval(inst.k());
  int64_t m = 1;
  for (const WeightedArc& a : inst.arcs()) {
    m = CheckedAdd(m, CheckedMul(a.weight, phi_k, "M"), "M");
  }
  return m;
}

}  // namespace

McfReduction BuildMcf(const KPotentialInstance& inst,
                      std::optional<int64_t> big_m) {
  const int n = inst.num_vertices();
  const int k = inst.k();
  const int64_t m = big_m.value_or(DefaultBigM(inst));
  if (m < 1) throw InvalidArgumentError("M must be positive");
  const int64_t two_m = CheckedMul(2, m, "2M");
  const BreakpointProfile profile = BreakpointsK(inst.convex(), k);
  const int z = static_cast<int>(profile.points.size()) - 1;

  McfReduction red;
  red.big_m = m;
  red.aux_vertex = n;
  red.network = FlowNetwork(n + 1);
  auto add = [&](int tail, int head, int64_t cap, int64_t cost,
                 McfArcRole role) {
    if (cap < 0) {
      throw InvalidArgumentError("negative copy capacity; M is too small");
    }
    red.network.AddArc(tail, head, cap, cost);
    red.provenance.push_back(role);
  };

  using Kind = McfArcRole::Kind;
  for (int i = 0; i < static_cast<int>(inst.arcs().size()); ++i) {
    const WeightedArc& a = inst.arcs()[i];
    if (a.weight == 0) {
      add(a.tail, a.head, m, 0, {Kind::kZeroWeightCopy, i, 0});
      add(a.tail, a.head, m, k, {Kind::kZeroWeightCopy, i, 1});
      continue;
    }
    const int64_t w = a.weight;
    // Copy j carries cost b_j. The first and last capacities use the slopes
    // on [0,1] and [k-1,k], which equal s_1^- and s_{z-1}^+ when z >= 2 and
    // stay meaningful when z = 1.
    add(a.tail, a.head,
        CheckedAdd(CheckedMul(w, profile.first_slope, "capacity"), m,
                   "capacity"),
        profile.points[0], {Kind::kWeightedCopy, i, 0});
    for (int j = 1; j < z; ++j) {
      const InteriorBreakpoint& b = profile.interior[j - 1];
      add(a.tail, a.head,
          CheckedMul(w, b.right_slope - b.left_slope, "capacity"),
          profile.points[j], {Kind::kWeightedCopy, i, j});
    }
    add(a.tail, a.head, m - CheckedMul(w, profile.last_slope, "capacity"),
        profile.points[z], {Kind::kWeightedCopy, i, z});
  }
  for (VertexId v = 2; v < n; ++v) {
    add(n, v, m, 0, {Kind::kAuxInterior, v, 0});
    add(n, v, m, k, {Kind::kAuxInterior, v, 1});
  }
  add(n, kBottom, two_m, k, {Kind::kAuxBottom, kBottom, 0});
  add(n, kTop, two_m, 0, {Kind::kAuxTop, kTop, 0});

  // d(v) = M (|out(v)| - |in(v)|) in G' = (V + aux, A + {(aux, v)}).
  std::vector<int64_t> degree(n + 1, 0);
  for (const WeightedArc& a : inst.arcs()) {
    ++degree[a.tail];
    --degree[a.head];
  }
  for (VertexId v = 0; v < n; ++v) {
    ++degree[n];
    --degree[v];
  }
  std::vector<int64_t> demands(n + 1);
  for (int v = 0; v <= n; ++v) demands[v] = CheckedMul(m, degree[v], "demand");
  red.network.SetDemands(std::move(demands));
  return red;
}

PotentialSolution SolveMinKPotentialMcf(const KPotentialInstance& inst) {
  const McfReduction red = BuildMcf(inst);
  Flow flow;
  try {
    flow = MinCostBFlow(red.network);
  } catch (const InfeasibleError& e) {
    throw InternalError(std::string("k-potential flow network infeasible: ") +
                        e.what());
  }
  const std::vector<int64_t> pi = FeasiblePotential(
      ResidualGraph::Of(red.network, flow), red.aux_vertex);

  PotentialSolution out;
  out.potential.values.resize(inst.num_vertices());
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    if (pi[v] < 0 || pi[v] > inst.k()) {
      throw InternalError("dual potential out of [0,k] at vertex " +
                          std::to_string(v));
    }
    out.potential.values[v] = static_cast<int>(pi[v]);
  }
  if (auto violation = ValidatePotential(out.potential, inst)) {
    throw InternalError("dual potential is not a k-potential: " +
                        violation->ToString());
  }
  out.h = HValue(out.potential, inst);
  return out;
}

std::string McfToJson(const McfReduction& reduction) {
  static constexpr const char* kRoleNames[] = {
      "weighted_copy", "zero_weight_copy", "aux_interior", "aux_bottom",
      "aux_top"};
  nlohmann::json arcs = nlohmann::json::array();
  const FlowNetwork& net = reduction.network;
  for (int i = 0; i < net.num_arcs(); ++i) {
    const FlowArc& a = net.arc(i);
    const McfArcRole& role = reduction.provenance[i];
    arcs.push_back({{"tail", a.tail},
                    {"head", a.head},
                    {"capacity", a.capacity},
                    {"cost", a.cost},
                    {"role", kRoleNames[static_cast<int>(role.kind)]},
                    {"source", role.source},
                    {"copy", role.copy}});
  }
  nlohmann::json doc = {{"vertices", net.num_vertices()},
                        {"aux_vertex", reduction.aux_vertex},
                        {"big_m", reduction.big_m},
                        {"demands", net.demands()},
                        {"arcs", std::move(arcs)}};
  return doc.dump(2);
}

}  // namespace kdiverse
