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

#include "kdiverse/framework.h"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "kdiverse/errors.h"

namespace kdiverse {

ReductionMap ReductionMap::Create(const PosetDag& poset,
                                  std::vector<ElementImage> images) {
  const int n = poset.num_vertices();
  std::unordered_map<VertexId, std::vector<bool>> below;
  for (size_t e = 0; e < images.size(); ++e) {
    const ElementImage& img = images[e];
    if (img.plus < 0 || img.plus >= n || img.minus < 0 || img.minus >= n) {
      throw InvalidArgumentError("element " + std::to_string(e) +
                                 " maps outside the poset");
    }
    if (img.plus == img.minus) continue;
    auto it = below.find(img.minus);
    if (it == below.end()) {
      it = below.emplace(img.minus, poset.Below(img.minus)).first;
    }
    if (!it->second[img.plus]) {
      throw InvalidArgumentError(
          "element " + std::to_string(e) + ": e+ = " +
          std::to_string(img.plus) + " is not below e- = " +
          std::to_string(img.minus));
    }
  }
  ReductionMap r;
  r.images_ = std::move(images);
  return r;
}

std::vector<ElementId> ReductionMap::DegenerateElements() const {
  std::vector<ElementId> out;
  for (int e = 0; e < size(); ++e) {
    if (images_[e].plus == images_[e].minus) out.push_back(e);
  }
  return out;
}

std::vector<ElementId> SupR(const Ideal& ideal, const ReductionMap& r,
                            const PosetDag& poset) {
  if (auto violation = FindClosureViolation(poset, ideal)) {
    throw InvalidArgumentError(
        "not an ideal: member " + std::to_string(violation->member) +
        " is above non-member " + std::to_string(violation->missing));
  }
  std::vector<bool> lower(poset.num_vertices(), false);
  lower[kBottom] = true;
  for (VertexId v : ideal.members) lower[v] = true;
  std::vector<ElementId> out;
  for (ElementId e = 0; e < r.size(); ++e) {
    if (lower[r.image(e).plus] && !lower[r.image(e).minus]) out.push_back(e);
  }
  return out;
}

KPotentialInstance KPotentialInstance::Build(const PosetDag& poset,
                                             const ReductionMap& r,
                                             ConvexSpec convex, int k) {
  if (k < 1) throw InvalidArgumentError("k must be at least 1");
  if (convex.k_bound() && *convex.k_bound() < k) {
    throw InvalidArgumentError("convex table does not cover [0,k]");
  }
  const int n = poset.num_vertices();
  for (const ElementImage& img : r.images()) {
    if (img.plus >= n || img.minus >= n) {
      throw InvalidArgumentError("reduction map does not match the poset");
    }
  }

  KPotentialInstance inst(std::move(convex));
  inst.k_ = k;

  std::vector<WeightedArc> arcs;
  arcs.reserve(poset.arcs().size() + r.size());
  for (const Arc& a : poset.arcs()) arcs.push_back({a.tail, a.head, 0});
  // One weighted arc per distinct (e-, e+), in order of first appearance.
  std::map<std::pair<VertexId, VertexId>, int> arc_of_pair;
  for (const ElementImage& img : r.images()) {
    if (img.plus == img.minus) {
      ++inst.num_dropped_;
      continue;
    }
    auto [it, inserted] = arc_of_pair.emplace(
        std::make_pair(img.minus, img.plus), static_cast<int>(arcs.size()));
    if (inserted) arcs.push_back({img.minus, img.plus, 0});
    ++arcs[it->second].weight;
  }

  std::vector<bool> used(n, false);
  used[kBottom] = used[kTop] = true;
  for (const WeightedArc& a : arcs) used[a.tail] = used[a.head] = true;
  inst.vertex_of_poset_.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (used[v]) inst.vertex_of_poset_[v] = inst.num_vertices_++;
  }
  for (WeightedArc& a : arcs) {
    a.tail = inst.vertex_of_poset_[a.tail];
    a.head = inst.vertex_of_poset_[a.head];
  }
  inst.arcs_ = std::move(arcs);

  inst.element_images_.reserve(r.size());
  for (const ElementImage& img : r.images()) {
    if (img.plus == img.minus) {
      inst.element_images_.push_back(std::nullopt);
    } else {
      inst.element_images_.push_back(
          ElementImage{inst.vertex_of_poset_[img.plus],
                       inst.vertex_of_poset_[img.minus]});
    }
  }
  return inst;
}

int64_t KPotentialInstance::TotalWeight() const {
  int64_t total = 0;
  for (const WeightedArc& a : arcs_) total += a.weight;
  return total;
}

std::string PotentialViolation::ToString() const {
  switch (condition) {
    case Condition::kP1:
      return "(P1) violated at vertex " + std::to_string(vertex);
    case Condition::kP2:
      return vertex < 0 ? "(P2) potential has the wrong number of vertices"
                        : "(P2) value out of [0,k] at vertex " +
                              std::to_string(vertex);
    case Condition::kP3:
      return "(P3) violated on arc " + std::to_string(arc) + " leaving vertex " +
             std::to_string(vertex);
  }
  return "";
}

std::optional<PotentialViolation> ValidatePotential(
    const KPotential& p, const KPotentialInstance& inst) {
  using Condition = PotentialViolation::Condition;
  if (static_cast<int>(p.values.size()) != inst.num_vertices()) {
    return PotentialViolation{Condition::kP2, -1, -1};
  }
  if (p.values[kBottom] != inst.k()) {
    return PotentialViolation{Condition::kP1, kBottom, -1};
  }
  if (p.values[kTop] != 0) return PotentialViolation{Condition::kP1, kTop, -1};
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    if (p.values[v] < 0 || p.values[v] > inst.k()) {
      return PotentialViolation{Condition::kP2, v, -1};
    }
  }
  for (size_t i = 0; i < inst.arcs().size(); ++i) {
    const WeightedArc& a = inst.arcs()[i];
    if (p.values[a.tail] > p.values[a.head]) {
      return PotentialViolation{Condition::kP3, a.tail, static_cast<int>(i)};
    }
  }
  return std::nullopt;
}

namespace {

void RequireValid(const KPotential& p, const KPotentialInstance& inst) {
  if (auto violation = ValidatePotential(p, inst)) {
    throw InvalidArgumentError("invalid k-potential: " + violation->ToString());
  }
}

}  // namespace

int64_t HValue(const KPotential& p, const KPotentialInstance& inst) {
  RequireValid(p, inst);
  int64_t total = 0;
  for (const WeightedArc& a : inst.arcs()) {
    if (a.weight == 0) continue;
    const int64_t term = CheckedMul(
        a.weight, inst.convex().Eval(p.values[a.head] - p.values[a.tail]),
        "H(p)");
    total = CheckedAdd(total, term, "H(p)");
  }
  return total;
}

int SolutionTuple::q() const {
  if (sets.empty()) return -1;
  const size_t size = sets.front().size();
  for (const auto& s : sets) {
    if (s.size() != size) return -1;
  }
  return static_cast<int>(size);
}

std::vector<std::pair<ElementId, int>> SolutionTuple::Multiplicities() const {
  std::map<ElementId, int> count;
  for (const auto& s : sets) {
    for (ElementId e : s) ++count[e];
  }
  return {count.begin(), count.end()};
}

SolutionTuple SolutionsFromPotential(const KPotential& p,
                                     const KPotentialInstance& inst) {
  RequireValid(p, inst);
  SolutionTuple t;
  t.sets.resize(inst.k());
  const auto& images = inst.element_images();
  for (ElementId e = 0; e < static_cast<ElementId>(images.size()); ++e) {
    if (!images[e]) continue;
    for (int i = p.values[images[e]->minus] + 1;
         i <= p.values[images[e]->plus]; ++i) {
      t.sets[i - 1].push_back(e);
    }
  }
  return t;
}

int64_t DSumPairwise(const SolutionTuple& t) {
  int64_t total = 0;
  for (int i = 0; i < t.k(); ++i) {
    for (int j = i + 1; j < t.k(); ++j) {
      const auto& a = t.sets[i];
      const auto& b = t.sets[j];
      size_t x = 0, y = 0;
      int64_t common = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] < b[y]) {
          ++x;
        } else if (b[y] < a[x]) {
          ++y;
        } else {
          ++common;
          ++x;
          ++y;
        }
      }
      total += static_cast<int64_t>(a.size() + b.size()) - 2 * common;
    }
  }
  return total;
}

int64_t DSumFromMultiplicities(const SolutionTuple& t) {
  int64_t total = 0;
  for (const auto& [e, mu] : t.Multiplicities()) {
    total += static_cast<int64_t>(mu) * (t.k() - mu);
  }
  return total;
}

int64_t DSum(const SolutionTuple& t) {
  const int64_t direct = DSumPairwise(t);
  if (direct != DSumFromMultiplicities(t)) {
    throw InternalError("d_sum routes disagree");
  }
  return direct;
}

int64_t DCov(const SolutionTuple& t) {
  return static_cast<int64_t>(t.Multiplicities().size());
}

int64_t DPhiStar(const SolutionTuple& t, const ConvexSpec& phi) {
  int64_t total = 0;
  for (const auto& [e, mu] : t.Multiplicities()) {
    total = CheckedAdd(total, phi.Eval(mu), "d*_phi");
  }
  return total;
}

}  // namespace kdiverse
