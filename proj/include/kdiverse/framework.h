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

#ifndef KDIVERSE_FRAMEWORK_H_
#define KDIVERSE_FRAMEWORK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdiverse/convex.h"
#include "kdiverse/poset.h"

namespace kdiverse {

// Image (e+, e-) of one ground element. Valid images satisfy e+ <= e-, i.e.
// e- reaches e+ in the poset DAG.
struct ElementImage {
  VertexId plus = 0;
  VertexId minus = 0;
  friend bool operator==(const ElementImage&, const ElementImage&) = default;
};

// Maps each ground element e (ids 0..size-1) to a pair of poset vertices.
// Ideals I of the interior correspond to solutions through
//   sup_r(I) = { e : e+ in I + {bot} and e- not in I + {bot} }.
class ReductionMap {
 public:
  // Throws InvalidArgumentError if an image leaves the poset or if e+ is not
  // reachable from e-.
  static ReductionMap Create(const PosetDag& poset,
                             std::vector<ElementImage> images);

  int size() const { return static_cast<int>(images_.size()); }
  const ElementImage& image(ElementId e) const { return images_[e]; }
  const std::vector<ElementImage>& images() const { return images_; }

  // Elements with e+ = e-. They belong to no solution and are dropped when an
  // instance is built.
  std::vector<ElementId> DegenerateElements() const;

 private:
  std::vector<ElementImage> images_;
};

// Throws InvalidArgumentError with the closure witness if `ideal` is not an
// ideal of the interior of `poset`. Result is sorted.
std::vector<ElementId> SupR(const Ideal& ideal, const ReductionMap& r,
                            const PosetDag& poset);

struct WeightedArc {
  VertexId tail = 0;
  VertexId head = 0;
  int64_t weight = 0;
};

// Instance (G, w, phi, k) of the minimum k-potential problem built from a
// poset and a reduction map. Arcs of the poset keep weight 0 and each
// distinct element pair (e-, e+) becomes one extra arc weighted by its
// multiplicity; parallel arcs are kept. Isolated non-terminal vertices are
// pruned and the survivors renumbered (bottom and top stay 0 and 1).
class KPotentialInstance {
 public:
  static KPotentialInstance Build(const PosetDag& poset, const ReductionMap& r,
                                  ConvexSpec convex, int k);

  int num_vertices() const { return num_vertices_; }
  int k() const { return k_; }
  const ConvexSpec& convex() const { return convex_; }
  const std::vector<WeightedArc>& arcs() const { return arcs_; }

  // Per ground element, its image in instance vertex ids; nullopt when the
  // element was dropped as degenerate.
  const std::vector<std::optional<ElementImage>>& element_images() const {
    return element_images_;
  }
  int num_elements() const { return static_cast<int>(element_images_.size()); }
  int num_dropped() const { return num_dropped_; }
  // Instance vertex of each poset vertex, -1 when pruned.
  const std::vector<VertexId>& vertex_of_poset() const {
    return vertex_of_poset_;
  }
  int64_t TotalWeight() const;

 private:
  KPotentialInstance(ConvexSpec convex) : convex_(std::move(convex)) {}

  int num_vertices_ = 0;
  int k_ = 0;
  ConvexSpec convex_;
  std::vector<WeightedArc> arcs_;
  std::vector<std::optional<ElementImage>> element_images_;
  std::vector<VertexId> vertex_of_poset_;
  int num_dropped_ = 0;
};

struct KPotential {
  std::vector<int> values;
  friend bool operator==(const KPotential&, const KPotential&) = default;
};

struct PotentialViolation {
  enum class Condition { kP1, kP2, kP3 };
  Condition condition;
  VertexId vertex = -1;  // offending vertex, or tail of the offending arc
  int arc = -1;          // arc index for kP3
  std::string ToString() const;
};

// Checks p(bot) = k, p(top) = 0 (P1), 0 <= p <= k (P2) and p(u) <= p(v) on
// every arc (u, v) (P3). Also reports a size mismatch as P2 at vertex -1.
std::optional<PotentialViolation> ValidatePotential(
    const KPotential& p, const KPotentialInstance& inst);

// H(p) = sum over arcs of w(a) phi(p(v) - p(u)). Throws on invalid p.
int64_t HValue(const KPotential& p, const KPotentialInstance& inst);

// Ordered k-tuple of equal-size subsets of the ground set. Every set is sorted.
struct SolutionTuple {
  std::vector<std::vector<ElementId>> sets;

  int k() const { return static_cast<int>(sets.size()); }
  // Common size q; -1 for an empty tuple or unequal sizes.
  int q() const;
  // (element, multiplicity) for elements with positive multiplicity, sorted.
  std::vector<std::pair<ElementId, int>> Multiplicities() const;
};

// A minimum k-potential and its objective value H.
struct PotentialSolution {
  KPotential potential;
  int64_t h = 0;
};

// Level-set construction: e is in S_i exactly when p(e-) < i <= p(e+).
SolutionTuple SolutionsFromPotential(const KPotential& p,
                                     const KPotentialInstance& inst);

// sum_{i<j} |S_i symdiff S_j|, evaluated pairwise.
int64_t DSumPairwise(const SolutionTuple& t);
// sum_e mu_e (k - mu_e).
int64_t DSumFromMultiplicities(const SolutionTuple& t);
// Both routes; throws InternalError if they disagree.
int64_t DSum(const SolutionTuple& t);
// |S_1 U ... U S_k|.
int64_t DCov(const SolutionTuple& t);
// sum_e phi(mu_e).
int64_t DPhiStar(const SolutionTuple& t, const ConvexSpec& phi);

}  // namespace kdiverse

#endif  // KDIVERSE_FRAMEWORK_H_
