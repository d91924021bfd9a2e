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

#ifndef KDIVERSE_POSET_H_
#define KDIVERSE_POSET_H_

#include <optional>
#include <span>
#include <vector>

namespace kdiverse {

using VertexId = int;
using ElementId = int;

// Fixed ids of the minimum and maximum of every poset DAG.
inline constexpr VertexId kBottom = 0;
inline constexpr VertexId kTop = 1;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A finite poset with minimum kBottom and maximum kTop, stored as a DAG whose
// arcs point from larger to smaller elements: u precedes-or-equals v exactly
// when u is reachable from v. Any arc set with the right reachability is
// accepted; no transitive reduction is performed.
class PosetDag {
 public:
  // Validates acyclicity and that kTop (resp. kBottom) is the only vertex
  // without incoming (resp. outgoing) arcs. Throws InvalidArgumentError.
  static PosetDag Create(int num_vertices, std::vector<Arc> arcs);

  int num_vertices() const { return num_vertices_; }
  int num_interior() const { return num_vertices_ - 2; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const VertexId> Successors(VertexId v) const;
  std::span<const VertexId> Predecessors(VertexId v) const;

  bool IsInterior(VertexId v) const {
    return v >= 2 && v < num_vertices_;
  }

  // Vertices reachable from `v` along arcs, `v` included.
  std::vector<bool> Below(VertexId v) const;
  bool Reaches(VertexId from, VertexId to) const;

  // A topological order starting at kTop and ending at kBottom.
  const std::vector<VertexId>& TopologicalOrder() const { return topo_; }

 private:
  PosetDag() = default;

  int num_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_begin_, in_begin_;
  std::vector<VertexId> out_, in_;
  std::vector<VertexId> topo_;
};

// Down-closed subset of the interior of a poset. Members are kept sorted.
struct Ideal {
  std::vector<VertexId> members;
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

// A member whose downset leaves the ideal: `member` is in the ideal,
// `missing` is below it but absent.
struct ClosureViolation {
  VertexId member;
  VertexId missing;
};

// Single reverse-reachability pass; nullopt when `ideal` is down-closed.
// Throws InvalidArgumentError if a member is not an interior vertex.
std::optional<ClosureViolation> FindClosureViolation(const PosetDag& poset,
                                                     const Ideal& ideal);

}  // namespace kdiverse

#endif  // KDIVERSE_POSET_H_
