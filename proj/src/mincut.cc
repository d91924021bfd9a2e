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

#include "kdiverse/mincut.h"

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>
#include <utility>

#include "kdiverse/errors.h"

namespace kdiverse {
namespace {

struct Adjacency {
  std::vector<std::vector<int>> out, in;
  explicit Adjacency(int n) : out(n), in(n) {}
  void Add(int u, int v) {
    out[u].push_back(v);
    in[v].push_back(u);
  }
};

std::vector<bool> Bfs(const std::vector<std::vector<int>>& adj, int from) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> q;
  seen[from] = true;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        q.push(v);
      }
    }
  }
  return seen;
}

// Iterative Tarjan over the vertices with alive[v]; returns component ids
// (reverse topological order of discovery), -1 for dead vertices.
std::vector<int> Tarjan(const std::vector<std::vector<int>>& adj,
                        const std::vector<bool>& alive, int* count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<int, size_t>> frames;
  int next_index = 0;
  *count = 0;
  for (int root = 0; root < n; ++root) {
    if (!alive[root] || index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      if (pos < adj[u].size()) {
        int v = adj[u][pos++];
        if (!alive[v]) continue;
        if (index[v] < 0) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          frames.push_back({v, 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const int done = u;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = *count;
        } while (w != done);
        ++*count;
      }
    }
  }
  return comp;
}

}  // namespace

void ValidateDigraph(const Digraph& g) {
  const int n = g.num_vertices;
  if (n < 2) throw InvalidArgumentError("digraph needs at least 2 vertices");
  if (g.source < 0 || g.source >= n || g.sink < 0 || g.sink >= n) {
    throw InvalidArgumentError("terminal out of range");
  }
  if (g.source == g.sink) throw InvalidArgumentError("source equals sink");
  for (const Arc& a : g.arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw InvalidArgumentError("arc endpoint out of range");
    }
  }
}

Digraph ParseDimacs(std::istream& in) {
  Digraph g;
  g.source = g.sink = -1;
  bool have_problem = false;
  long declared_arcs = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long n = 0, m = 0;
      if (have_problem) throw ParseError(line_no, "duplicate problem line");
      if (!(ls >> kind >> n >> m) || kind != "max" || n < 2 || m < 0) {
        throw ParseError(line_no, "expected 'p max <n> <m>'");
      }
      g.num_vertices = static_cast<int>(n);
      declared_arcs = m;
      have_problem = true;
    } else if (tag == "n") {
      long id = 0;
      std::string which;
      if (!have_problem) throw ParseError(line_no, "node line before 'p'");
      if (!(ls >> id >> which) || id < 1 || id > g.num_vertices ||
          (which != "s" && which != "t")) {
        throw ParseError(line_no, "expected 'n <id> s|t'");
      }
      int& slot = which == "s" ? g.source : g.sink;
      if (slot >= 0) throw ParseError(line_no, "terminal given twice");
      slot = static_cast<int>(id - 1);
    } else if (tag == "a") {
      long u = 0, v = 0;
      if (!have_problem) throw ParseError(line_no, "arc line before 'p'");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > g.num_vertices ||
          v > g.num_vertices) {
        throw ParseError(line_no, "expected 'a <u> <v> [cap]' with ids in 1.." +
                                      std::to_string(g.num_vertices));
      }
      g.arcs.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_problem) throw ParseError(0, "missing 'p max' line");
  if (g.source < 0 || g.sink < 0) throw ParseError(0, "missing terminal");
  if (g.source == g.sink) throw ParseError(0, "source equals sink");
  if (static_cast<long>(g.arcs.size()) != declared_arcs) {
    throw ParseError(0, "arc count differs from the 'p' line");
  }
  return g;
}

PqResult BuildPq(const Digraph& g) {
  ValidateDigraph(g);
  const int n = g.num_vertices;
  FlowNetwork net(n);
  std::vector<int> flow_arc(g.arcs.size(), -1);
  for (size_t i = 0; i < g.arcs.size(); ++i) {
    if (g.arcs[i].tail != g.arcs[i].head) {
      flow_arc[i] = net.AddArc(g.arcs[i].tail, g.arcs[i].head, 1);
    }
  }
  MaxFlowResult mf = MaxFlow(net, g.source, g.sink);

  PqResult out;
  out.q = mf.value;
  out.flow.values.assign(g.arcs.size(), 0);
  Adjacency residual(n);
  for (size_t i = 0; i < g.arcs.size(); ++i) {
    if (flow_arc[i] < 0) continue;
    const int64_t f = mf.flow.values[flow_arc[i]];
    out.flow.values[i] = f;
    if (f == 0) {
      residual.Add(g.arcs[i].tail, g.arcs[i].head);
    } else {
      residual.Add(g.arcs[i].head, g.arcs[i].tail);
    }
  }

  std::vector<bool> from_s = Bfs(residual.out, g.source);
  std::vector<bool> to_t = Bfs(residual.in, g.sink);
  if (from_s[g.sink]) throw InternalError("flow is not maximum");
  std::vector<bool> alive(n);
  for (int v = 0; v < n; ++v) alive[v] = !from_s[v] && !to_t[v];
  int count = 0;
  std::vector<int> comp = Tarjan(residual.out, alive, &count);

  PqDag& dag = out.dag;
  dag.num_components = count + 2;
  dag.component_of.resize(n);
  for (int v = 0; v < n; ++v) {
    dag.component_of[v] = from_s[v] ? 0 : to_t[v] ? 1 : comp[v] + 2;
  }
  for (int u = 0; u < n; ++u) {
    for (int v : residual.out[u]) {
      int cu = dag.component_of[u], cv = dag.component_of[v];
      if (cu >= 2 && cv >= 2 && cu != cv) dag.arcs.push_back({cu, cv});
    }
  }
  std::sort(dag.arcs.begin(), dag.arcs.end());
  dag.arcs.erase(std::unique(dag.arcs.begin(), dag.arcs.end()),
                 dag.arcs.end());
  return out;
}

BlockPartition PqPartition(const PqDag& dag) {
  return MakeBlockPartition(dag.component_of, dag.num_components, dag.arcs);
}

PreReductionMap MinCutPreReduction(const Flow& f, const Digraph& g) {
  PreReductionMap pre(g.arcs.size());
  for (size_t i = 0; i < g.arcs.size(); ++i) {
    if (f.values[i] > 0) {
      pre[i] = {g.arcs[i].tail, g.arcs[i].head};
    } else {
      pre[i] = {g.sink, g.sink};
    }
  }
  return pre;
}

bool IsMinimumCut(const Digraph& g, const std::vector<ElementId>& cut,
                  int64_t q) {
  if (static_cast<int64_t>(cut.size()) != q) return false;
  std::vector<bool> removed(g.arcs.size(), false);
  for (ElementId e : cut) {
    if (e < 0 || e >= static_cast<int>(g.arcs.size())) return false;
    removed[e] = true;
  }
  Adjacency adj(g.num_vertices);
  for (size_t i = 0; i < g.arcs.size(); ++i) {
    if (!removed[i]) adj.Add(g.arcs[i].tail, g.arcs[i].head);
  }
  return !Bfs(adj.out, g.source)[g.sink];
}

DiverseMinCut SolveDiverseMinCut(const Digraph& g, int k,
                                 const Measure& measure, Backend backend,
                                 const DumpRequest& dumps) {
  PqResult pq = BuildPq(g);
  BlockPartition part = PqPartition(pq.dag);
  ReductionMap r = Lift(MinCutPreReduction(pq.flow, g), part);

  DiverseMinCut out;
  out.result = SolveDiverse(part.block_poset, r, measure, backend, k, dumps);
  out.q = pq.q;
  out.interior_components = pq.dag.num_components - 2;
  for (const auto& cut : out.result.tuple.sets) {
    if (!IsMinimumCut(g, cut, pq.q)) {
      throw InternalError("returned arc set is not a minimum cut");
    }
  }
  return out;
}

}  // namespace kdiverse
