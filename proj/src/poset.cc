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

#include "kdiverse/poset.h"

#include <algorithm>
#include <string>

#include "kdiverse/errors.h"

namespace kdiverse {
namespace {

// CSR adjacency: begin[v]..begin[v+1] indexes into `targets`.
void BuildCsr(int n, const std::vector<Arc>& arcs, bool outgoing,
              std::vector<int>* begin, std::vector<VertexId>* targets) {
  begin->assign(n + 1, 0);
  for (const Arc& a : arcs) ++(*begin)[(outgoing ? a.tail : a.head) + 1];
  for (int v = 0; v < n; ++v) (*begin)[v + 1] += (*begin)[v];
  targets->assign(arcs.size(), 0);
  std::vector<int> fill(begin->begin(), begin->end() - 1);
  for (const Arc& a : arcs) {
    const VertexId from = outgoing ? a.tail : a.head;
    (*targets)[fill[from]++] = outgoing ? a.head : a.tail;
  }
}

}  // namespace

PosetDag PosetDag::Create(int num_vertices, std::vector<Arc> arcs) {
  if (num_vertices < 2) {
    throw InvalidArgumentError("poset needs distinct bottom and top vertices");
  }
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= num_vertices || a.head < 0 ||
        a.head >= num_vertices) {
      throw InvalidArgumentError("poset arc (" + std::to_string(a.tail) + "," +
                                 std::to_string(a.head) + ") out of range");
    }
  }
  PosetDag dag;
  dag.num_vertices_ = num_vertices;
  dag.arcs_ = std::move(arcs);
  BuildCsr(num_vertices, dag.arcs_, true, &dag.out_begin_, &dag.out_);
  BuildCsr(num_vertices, dag.arcs_, false, &dag.in_begin_, &dag.in_);

  for (VertexId v = 0; v < num_vertices; ++v) {
    const bool no_in = dag.Predecessors(v).empty();
    const bool no_out = dag.Successors(v).empty();
    if (no_in != (v == kTop)) {
      throw InvalidArgumentError(
          v == kTop ? "top vertex has an incoming arc"
                    : "vertex " + std::to_string(v) +
                          " has no incoming arc but is not top");
    }
    if (no_out != (v == kBottom)) {
      throw InvalidArgumentError(
          v == kBottom ? "bottom vertex has an outgoing arc"
                       : "vertex " + std::to_string(v) +
                             " has no outgoing arc but is not bottom");
    }
  }

  // Kahn's algorithm; top is the unique source.
  std::vector<int> indegree(num_vertices, 0);
  for (const Arc& a : dag.arcs_) ++indegree[a.head];
  dag.topo_.reserve(num_vertices);
  dag.topo_.push_back(kTop);
  for (size_t i = 0; i < dag.topo_.size(); ++i) {
    for (VertexId w : dag.Successors(dag.topo_[i])) {
      if (--indegree[w] == 0) dag.topo_.push_back(w);
    }
  }
  if (static_cast<int>(dag.topo_.size()) != num_vertices) {
    throw InvalidArgumentError("poset arcs contain a cycle");
  }
  return dag;
}

std::span<const VertexId> PosetDag::Successors(VertexId v) const {
  return {out_.data() + out_begin_[v],
          static_cast<size_t>(out_begin_[v + 1] - out_begin_[v])};
}

std::span<const VertexId> PosetDag::Predecessors(VertexId v) const {
  return {in_.data() + in_begin_[v],
          static_cast<size_t>(in_begin_[v + 1] - in_begin_[v])};
}

std::vector<bool> PosetDag::Below(VertexId v) const {
  std::vector<bool> seen(num_vertices_, false);
  std::vector<VertexId> stack = {v};
  seen[v] = true;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : Successors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool PosetDag::Reaches(VertexId from, VertexId to) const {
  return Below(from)[to];
}

std::optional<ClosureViolation> FindClosureViolation(const PosetDag& poset,
                                                     const Ideal& ideal) {
  const int n = poset.num_vertices();
  std::vector<bool> in_ideal(n, false);
  for (VertexId v : ideal.members) {
    if (!poset.IsInterior(v)) {
      throw InvalidArgumentError("ideal member " + std::to_string(v) +
                                 " is not an interior vertex");
    }
    in_ideal[v] = true;
  }
  // Walk down from all members at once, remembering where each walk started.
  std::vector<VertexId> origin(n, -1);
  std::vector<VertexId> stack;
  for (VertexId v : ideal.members) {
    origin[v] = v;
    stack.push_back(v);
  }
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : poset.Successors(u)) {
      if (origin[w] != -1) continue;
      origin[w] = origin[u];
      if (poset.IsInterior(w) && !in_ideal[w]) {
        return ClosureViolation{origin[u], w};
      }
      stack.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace kdiverse
