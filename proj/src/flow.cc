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

#include "kdiverse/flow.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <string>

#include "kdiverse/errors.h"

namespace kdiverse {

int FlowNetwork::AddArc(int tail, int head, int64_t capacity, int64_t cost) {
  if (tail < 0 || tail >= num_vertices_ || head < 0 || head >= num_vertices_) {
    throw InvalidArgumentError("flow arc endpoint out of range");
  }
  if (capacity < 0) throw InvalidArgumentError("negative arc capacity");
  arcs_.push_back({tail, head, capacity, cost});
  return static_cast<int>(arcs_.size()) - 1;
}

void FlowNetwork::SetDemands(std::vector<int64_t> demands) {
  if (static_cast<int>(demands.size()) != num_vertices_) {
    throw InvalidArgumentError("demand vector size differs from vertex count");
  }
  demands_ = std::move(demands);
}

std::vector<int64_t> Boundary(const FlowNetwork& net, const Flow& flow) {
  std::vector<int64_t> out(net.num_vertices(), 0);
  for (int i = 0; i < net.num_arcs(); ++i) {
    out[net.arc(i).tail] += flow.values[i];
    out[net.arc(i).head] -= flow.values[i];
  }
  return out;
}

int64_t FlowCost(const FlowNetwork& net, const Flow& flow) {
  int64_t total = 0;
  for (int i = 0; i < net.num_arcs(); ++i) {
    total = CheckedAdd(
        total, CheckedMul(net.arc(i).cost, flow.values[i], "flow cost"),
        "flow cost");
  }
  return total;
}

namespace {

// Paired residual edges: edge 2i is arc i forward, 2i+1 its reverse.
struct ResidualEdges {
  struct Edge {
    int to;
    int64_t residual;
    int64_t cost;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adjacency;

  explicit ResidualEdges(const FlowNetwork& net)
      : adjacency(net.num_vertices()) {
    edges.reserve(2 * net.num_arcs());
    for (int i = 0; i < net.num_arcs(); ++i) {
      const FlowArc& a = net.arc(i);
      adjacency[a.tail].push_back(static_cast<int>(edges.size()));
      edges.push_back({a.head, a.capacity, a.cost});
      adjacency[a.head].push_back(static_cast<int>(edges.size()));
      edges.push_back({a.tail, 0, -a.cost});
    }
  }

  void Push(int e, int64_t amount) {
    edges[e].residual -= amount;
    edges[e ^ 1].residual += amount;
  }

  Flow ToFlow(const FlowNetwork& net) const {
    Flow flow;
    flow.values.resize(net.num_arcs());
    for (int i = 0; i < net.num_arcs(); ++i) {
      flow.values[i] = edges[2 * i + 1].residual;
    }
    return flow;
  }
};

class Dinic {
 public:
  Dinic(ResidualEdges* g, int source, int sink)
      : g_(*g),
        source_(source),
        sink_(sink),
        level_(g->adjacency.size()),
        current_(g->adjacency.size()) {}

  int64_t Run() {
    int64_t total = 0;
    while (BuildLevels()) {
      std::fill(current_.begin(), current_.end(), 0);
      while (int64_t pushed =
                 Augment(source_, std::numeric_limits<int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  bool BuildLevels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source_] = 0;
    queue.push(source_);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int e : g_.adjacency[u]) {
        const auto& edge = g_.edges[e];
        if (edge.residual > 0 && level_[edge.to] < 0) {
          level_[edge.to] = level_[u] + 1;
          queue.push(edge.to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  int64_t Augment(int u, int64_t limit) {
    if (u == sink_) return limit;
    auto& adjacency = g_.adjacency[u];
    for (int& i = current_[u]; i < static_cast<int>(adjacency.size()); ++i) {
      const int e = adjacency[i];
      const auto& edge = g_.edges[e];
      if (edge.residual <= 0 || level_[edge.to] != level_[u] + 1) continue;
      const int64_t pushed = Augment(edge.to, std::min(limit, edge.residual));
      if (pushed > 0) {
        g_.Push(e, pushed);
        return pushed;
      }
    }
    return 0;
  }

  ResidualEdges& g_;
  int source_;
  int sink_;
  std::vector<int> level_;
  std::vector<int> current_;
};

std::vector<bool> ResidualReach(const ResidualEdges& g, int source) {
  std::vector<bool> seen(g.adjacency.size(), false);
  std::vector<int> stack = {source};
  seen[source] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e : g.adjacency[u]) {
      const auto& edge = g.edges[e];
      if (edge.residual > 0 && !seen[edge.to]) {
        seen[edge.to] = true;
        stack.push_back(edge.to);
      }
    }
  }
  return seen;
}

}  // namespace

MaxFlowResult MaxFlow(const FlowNetwork& net, int source, int sink) {
  if (source == sink) throw InvalidArgumentError("max flow needs s != t");
  if (source < 0 || sink < 0 || source >= net.num_vertices() ||
      sink >= net.num_vertices()) {
    throw InvalidArgumentError("max flow terminal out of range");
  }
  ResidualEdges g(net);
  MaxFlowResult result;
  result.value = Dinic(&g, source, sink).Run();
  result.flow = g.ToFlow(net);
  // Strong duality, checked on every solve.
  const std::vector<bool> side = ResidualReach(g, source);
  if (side[sink] || CutCapacity(net, side) != result.value) {
    throw InternalError("max flow value differs from min cut capacity");
  }
  return result;
}

std::vector<bool> MinCutSide(const FlowNetwork& net, const Flow& flow,
                             int source, int sink) {
  std::vector<bool> seen(net.num_vertices(), false);
  const ResidualGraph residual = ResidualGraph::Of(net, flow);
  std::vector<std::vector<int>> out(net.num_vertices());
  for (const ResidualArc& a : residual.arcs) out[a.tail].push_back(a.head);
  std::vector<int> stack = {source};
  seen[source] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : out[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (seen[sink]) {
    throw InvalidArgumentError("flow is not maximum: sink reachable");
  }
  return seen;
}

int64_t CutCapacity(const FlowNetwork& net, const std::vector<bool>& side) {
  int64_t total = 0;
  for (const FlowArc& a : net.arcs()) {
    if (side[a.tail] && !side[a.head]) total += a.capacity;
  }
  return total;
}

ResidualGraph ResidualGraph::Of(const FlowNetwork& net, const Flow& flow) {
  ResidualGraph g;
  g.num_vertices = net.num_vertices();
  for (int i = 0; i < net.num_arcs(); ++i) {
    const FlowArc& a = net.arc(i);
    const int64_t f = flow.values[i];
    if (f < 0 || f > a.capacity) {
      throw InvalidArgumentError("flow violates capacity on arc " +
                                 std::to_string(i));
    }
    if (f < a.capacity) {
      g.arcs.push_back({a.tail, a.head, a.capacity - f, a.cost, i, true});
    }
    if (f > 0) g.arcs.push_back({a.head, a.tail, f, -a.cost, i, false});
  }
  return g;
}

namespace {

// Bellman-Ford (queue based) with all vertices starting at distance 0.
// Returns false on a negative cycle.
bool ShortestFromVirtualRoot(const ResidualGraph& residual,
                             std::vector<int64_t>* dist) {
  const int n = residual.num_vertices;
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < static_cast<int>(residual.arcs.size()); ++i) {
    out[residual.arcs[i].tail].push_back(i);
  }
  dist->assign(n, 0);
  std::vector<int> relaxations(n, 0);
  std::vector<bool> queued(n, true);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) queue.push_back(v);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    queued[u] = false;
    for (int i : out[u]) {
      const ResidualArc& a = residual.arcs[i];
      const int64_t candidate = (*dist)[u] + a.length;
      if (candidate < (*dist)[a.head]) {
        (*dist)[a.head] = candidate;
        if (++relaxations[a.head] > n) return false;
        if (!queued[a.head]) {
          queued[a.head] = true;
          queue.push_back(a.head);
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<int64_t> FeasiblePotential(const ResidualGraph& residual,
                                       int root) {
  if (root < 0 || root >= std::max(residual.num_vertices, 1)) {
    throw InvalidArgumentError("potential root out of range");
  }
  std::vector<int64_t> dist;
  if (!ShortestFromVirtualRoot(residual, &dist)) {
    throw InfeasibleError("residual graph has a negative-length cycle");
  }
  const int64_t shift = dist[root];
  for (int64_t& d : dist) d -= shift;
  return dist;
}

bool HasNegativeCycle(const ResidualGraph& residual) {
  std::vector<int64_t> dist;
  return !ShortestFromVirtualRoot(residual, &dist);
}

namespace {

void CheckFeasible(const FlowNetwork& net) {
  const int n = net.num_vertices();
  FlowNetwork aux(n + 2);
  for (const FlowArc& a : net.arcs()) aux.AddArc(a.tail, a.head, a.capacity);
  int64_t supply = 0;
  for (int v = 0; v < n; ++v) {
    const int64_t d = net.demands()[v];
    if (d > 0) {
      aux.AddArc(n, v, d);
      supply = CheckedAdd(supply, d, "total supply");
    } else if (d < 0) {
      aux.AddArc(v, n + 1, -d);
    }
  }
  if (supply == 0) return;
  if (MaxFlow(aux, n, n + 1).value != supply) {
    throw InfeasibleError("demands cannot be met by the network capacities");
  }
}

class CapacityScaling {
 public:
  explicit CapacityScaling(const FlowNetwork& net)
      : net_(net),
        g_(net),
        n_(net.num_vertices()),
        excess_(net.demands()),
        potential_(n_, 0) {}

  Flow Run() {
    int64_t largest = 1;
    for (int64_t d : excess_) largest = std::max(largest, d < 0 ? -d : d);
    for (const FlowArc& a : net_.arcs()) {
      largest = std::max(largest, a.capacity);
    }
    int64_t delta = 1;
    while (delta <= largest / 2) delta *= 2;
    for (; delta >= 1; delta /= 2) {
      SaturateNegative(delta);
      while (AugmentOnce(delta)) {
      }
    }
    for (int64_t e : excess_) {
      if (e != 0) throw InternalError("capacity scaling left an imbalance");
    }
    return g_.ToFlow(net_);
  }

 private:
  int64_t Reduced(int tail, int e) const {
    return g_.edges[e].cost + potential_[tail] - potential_[g_.edges[e].to];
  }

  void Move(int tail, int e, int64_t amount) {
    g_.Push(e, amount);
    excess_[tail] -= amount;
    excess_[g_.edges[e].to] += amount;
  }

  void SaturateNegative(int64_t delta) {
    for (int u = 0; u < n_; ++u) {
      for (int e : g_.adjacency[u]) {
        const int64_t r = g_.edges[e].residual;
        if (r >= delta && Reduced(u, e) < 0) Move(u, e, r);
      }
    }
  }

  // One Dijkstra from every vertex with excess >= delta over the
  // delta-residual graph; pushes along the path to the nearest deficit.
  bool AugmentOnce(int64_t delta) {
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
    std::vector<int64_t> dist(n_, kInf);
    std::vector<int> parent_edge(n_, -1);
    std::vector<bool> done(n_, false);
    using Entry = std::pair<int64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (int v = 0; v < n_; ++v) {
      if (excess_[v] >= delta) {
        dist[v] = 0;
        heap.push({0, v});
      }
    }
    if (heap.empty()) return false;
    int target = -1;
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (done[u] || d != dist[u]) continue;
      done[u] = true;
      if (excess_[u] <= -delta) {
        target = u;
        break;
      }
      for (int e : g_.adjacency[u]) {
        const auto& edge = g_.edges[e];
        if (edge.residual < delta || done[edge.to]) continue;
        const int64_t candidate = d + Reduced(u, e);
        if (candidate < dist[edge.to]) {
          dist[edge.to] = candidate;
          parent_edge[edge.to] = e;
          heap.push({candidate, edge.to});
        }
      }
    }
    if (target < 0) return false;
    const int64_t reach = dist[target];
    for (int v = 0; v < n_; ++v) {
      potential_[v] += done[v] ? dist[v] : reach;
    }
    // Walk back to the source of the path and find the bottleneck.
    int64_t amount = -excess_[target];
    int v = target;
    while (parent_edge[v] >= 0) {
      const int e = parent_edge[v];
      amount = std::min(amount, g_.edges[e].residual);
      v = g_.edges[e ^ 1].to;
    }
    amount = std::min(amount, excess_[v]);
    v = target;
    while (parent_edge[v] >= 0) {
      const int e = parent_edge[v];
      g_.Push(e, amount);
      v = g_.edges[e ^ 1].to;
    }
    excess_[v] -= amount;
    excess_[target] += amount;
    return true;
  }

  const FlowNetwork& net_;
  ResidualEdges g_;
  int n_;
  std::vector<int64_t> excess_;
  std::vector<int64_t> potential_;
};

}  // namespace

Flow MinCostBFlow(const FlowNetwork& net) {
  const int n = net.num_vertices();
  std::vector<int64_t> zero(n, 0);
  const std::vector<int64_t>& demands = net.has_demands() ? net.demands() : zero;
  int64_t balance = 0;
  for (int64_t d : demands) balance = CheckedAdd(balance, d, "demand sum");
  if (balance != 0) throw InfeasibleError("demands do not sum to zero");
  for (const FlowArc& a : net.arcs()) {
    if (a.cost != 0) {
      CheckedMul(a.capacity, a.cost < 0 ? -a.cost : a.cost, "arc cost bound");
    }
  }

  FlowNetwork with_demands = net;
  if (!net.has_demands()) with_demands.SetDemands(zero);
  CheckFeasible(with_demands);

  Flow flow = CapacityScaling(with_demands).Run();

  if (Boundary(net, flow) != demands) {
    throw InternalError("min cost flow does not meet the demands");
  }
  if (HasNegativeCycle(ResidualGraph::Of(net, flow))) {
    throw InternalError("min cost flow residual has a negative cycle");
  }
  return flow;
}

}  // namespace kdiverse
