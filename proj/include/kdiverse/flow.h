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

#ifndef KDIVERSE_FLOW_H_
#define KDIVERSE_FLOW_H_

#include <cstdint>
#include <vector>

namespace kdiverse {

struct FlowArc {
  int tail = 0;
  int head = 0;
  int64_t capacity = 0;
  int64_t cost = 0;
};

// Directed network with integer capacities, integer costs and optional
// vertex demands d(v) = (outflow - inflow) required at v. Arc ids follow
// insertion order.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_vertices) : num_vertices_(num_vertices) {}

  int AddArc(int tail, int head, int64_t capacity, int64_t cost = 0);
  void SetDemands(std::vector<int64_t> demands);

  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const FlowArc& arc(int id) const { return arcs_[id]; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }
  bool has_demands() const { return !demands_.empty(); }
  const std::vector<int64_t>& demands() const { return demands_; }

 private:
  int num_vertices_;
  std::vector<FlowArc> arcs_;
  std::vector<int64_t> demands_;
};

// Per-arc flow values, indexed like the network's arcs.
struct Flow {
  std::vector<int64_t> values;
};

// Outflow minus inflow at every vertex.
std::vector<int64_t> Boundary(const FlowNetwork& net, const Flow& flow);
int64_t FlowCost(const FlowNetwork& net, const Flow& flow);

struct MaxFlowResult {
  Flow flow;
  int64_t value = 0;
};

// Dinic's algorithm with current-arc pointers. The result is checked against
// the capacity of the residual-reachability cut; a mismatch raises
// InternalError.
MaxFlowResult MaxFlow(const FlowNetwork& net, int source, int sink);

// Vertices reachable from `source` in the residual graph of `flow`.
// Throws InvalidArgumentError if `sink` is reachable (flow not maximum).
std::vector<bool> MinCutSide(const FlowNetwork& net, const Flow& flow,
                             int source, int sink);

// Sum of capacities of arcs leaving `side`.
int64_t CutCapacity(const FlowNetwork& net, const std::vector<bool>& side);

struct ResidualArc {
  int tail = 0;
  int head = 0;
  int64_t residual = 0;  // positive
  int64_t length = 0;    // cost forward, negated cost backward
  int arc = 0;           // network arc this residual arc comes from
  bool forward = true;
};

struct ResidualGraph {
  int num_vertices = 0;
  std::vector<ResidualArc> arcs;

  static ResidualGraph Of(const FlowNetwork& net, const Flow& flow);
};

// Integral min-cost flow meeting every demand of `net`: successive shortest
// paths with Dijkstra on reduced costs, under capacity scaling. Negative
// costs are allowed. Feasibility is checked first with a max-flow on the
// supersource/supersink network (InfeasibleError); the result is certified
// optimal by a negative-cycle scan of its residual graph.
Flow MinCostBFlow(const FlowNetwork& net);

// pi with length(a) >= pi(head) - pi(tail) on every residual arc and
// pi(root) = 0: Bellman-Ford from an auxiliary vertex joined to all vertices
// by zero-length arcs. Throws InfeasibleError on a negative-length cycle.
std::vector<int64_t> FeasiblePotential(const ResidualGraph& residual,
                                       int root);

bool HasNegativeCycle(const ResidualGraph& residual);

}  // namespace kdiverse

#endif  // KDIVERSE_FLOW_H_
