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

#include "kdiverse/total_orders.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "json.hpp"
#include "kdiverse/errors.h"

namespace kdiverse {

LatticePoint ProductLattice::Meet(const LatticePoint& a,
                                  const LatticePoint& b) {
  LatticePoint out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

LatticePoint ProductLattice::Join(const LatticePoint& a,
                                  const LatticePoint& b) {
  LatticePoint out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ProductLattice ProductLattice::Create(std::vector<int> order_sizes,
                                      std::vector<LatticePoint> members) {
  if (order_sizes.empty()) throw InvalidArgumentError("no total orders");
  if (members.empty()) throw InvalidArgumentError("lattice has no members");
  ProductLattice lat;
  lat.offset_.push_back(0);
  for (int s : order_sizes) {
    if (s < 1) throw InvalidArgumentError("empty total order");
    lat.offset_.push_back(lat.offset_.back() + s);
  }
  for (const LatticePoint& x : members) {
    if (x.size() != order_sizes.size()) {
      throw InvalidArgumentError("member has the wrong number of coordinates");
    }
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0 || x[i] >= order_sizes[i]) {
        throw InvalidArgumentError("member coordinate out of range");
      }
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::set<LatticePoint> all(members.begin(), members.end());
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (!all.count(Meet(a, b)) || !all.count(Join(a, b))) {
        throw InvalidArgumentError("members are not closed under meet/join");
      }
    }
  }
  lat.sizes_ = std::move(order_sizes);
  lat.members_ = std::move(members);
  return lat;
}

std::vector<ElementId> ProductLattice::AsSet(const LatticePoint& x) const {
  std::vector<ElementId> out;
  for (int i = 0; i < num_orders(); ++i) out.push_back(GroundElement(i, x[i]));
  return out;
}

ProductLattice ParseLatticeJson(std::istream& in,
                                std::vector<std::vector<int64_t>>* labels) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  try {
    const auto& orders = doc.at("orders");
    const auto& members = doc.at("members");
    if (!orders.is_array() || !members.is_array()) {
      throw ParseError(0, "'orders' and 'members' must be arrays");
    }
    std::vector<int> sizes;
    std::vector<std::map<int64_t, int>> position;
    if (labels) labels->clear();
    for (const auto& order : orders) {
      std::map<int64_t, int> pos;
      std::vector<int64_t> names;
      for (const auto& label : order) {
        names.push_back(label.get<int64_t>());
        if (!pos.emplace(names.back(), static_cast<int>(pos.size())).second) {
          throw ParseError(0, "repeated label in an order");
        }
      }
      if (labels) labels->push_back(std::move(names));
      sizes.push_back(static_cast<int>(pos.size()));
      position.push_back(std::move(pos));
    }
    std::vector<LatticePoint> points;
    for (const auto& member : members) {
      if (member.size() != sizes.size()) {
        throw ParseError(0, "member has the wrong number of coordinates");
      }
      LatticePoint x;
      for (size_t i = 0; i < sizes.size(); ++i) {
        auto it = position[i].find(member[i].get<int64_t>());
        if (it == position[i].end()) {
          throw ParseError(0, "member uses an unknown label");
        }
        x.push_back(it->second);
      }
      points.push_back(std::move(x));
    }
    return ProductLattice::Create(std::move(sizes), std::move(points));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const InvalidArgumentError& e) {
    throw ParseError(0, e.what());
  }
}

JoinIrreducibles FindJoinIrreducibles(const ProductLattice& lat) {
  const auto& ms = lat.members();
  LatticePoint bottom = ms.front();
  for (const auto& x : ms) bottom = ProductLattice::Meet(bottom, x);

  std::vector<LatticePoint> irr;
  for (const auto& x : ms) {
    if (x == bottom) continue;
    bool reducible = false;
    for (size_t a = 0; a < ms.size() && !reducible; ++a) {
      if (ms[a] == x) continue;
      for (size_t b = a + 1; b < ms.size(); ++b) {
        if (ms[b] != x && ProductLattice::Join(ms[a], ms[b]) == x) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) irr.push_back(x);
  }
  // Coordinate sums grow strictly along the order.
  auto weight = [](const LatticePoint& x) {
    return std::accumulate(x.begin(), x.end(), 0);
  };
  std::stable_sort(irr.begin(), irr.end(),
                   [&](const auto& a, const auto& b) {
                     return weight(a) < weight(b);
                   });
  JoinIrreducibles out;
  for (size_t i = 0; i < irr.size(); ++i) {
    for (size_t j = 0; j < irr.size(); ++j) {
      if (i != j && ProductLattice::Join(irr[i], irr[j]) == irr[j]) {
        out.below.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  out.points = std::move(irr);
  return out;
}

ChainBlocks BuildChainBlocks(const ProductLattice& lat,
                             const JoinIrreducibles& irr) {
  const int q = lat.num_orders();
  std::vector<int> ring_offset(q + 1, 0);
  for (int i = 0; i < q; ++i) {
    ring_offset[i + 1] = ring_offset[i] + lat.order_size(i) + 1;
  }
  LatticePoint y = lat.members().front();
  for (const auto& x : lat.members()) y = ProductLattice::Meet(y, x);

  std::vector<LatticePoint> chain;
  std::vector<int> block_of(ring_offset[q], 1);
  for (int i = 0; i < q; ++i) {
    for (int p = 0; p <= y[i]; ++p) block_of[ring_offset[i] + p] = 0;
  }
  chain.push_back(y);
  const int m = static_cast<int>(irr.points.size());
  for (int j = 0; j < m; ++j) {
    LatticePoint next = ProductLattice::Join(y, irr.points[j]);
    if (next == y) throw InternalError("join chain is not strict");
    for (int i = 0; i < q; ++i) {
      for (int p = y[i] + 1; p <= next[i]; ++p) {
        block_of[ring_offset[i] + p] = j + 2;
      }
    }
    y = std::move(next);
    chain.push_back(y);
  }
  std::vector<Arc> arcs;
  for (auto [lo, hi] : irr.below) arcs.push_back({hi + 2, lo + 2});
  PreReductionMap pre(lat.ground_size());
  for (int i = 0; i < q; ++i) {
    for (int p = 0; p < lat.order_size(i); ++p) {
      pre[lat.GroundElement(i, p)] = {ring_offset[i] + p,
                                      ring_offset[i] + p + 1};
    }
  }
  return {MakeBlockPartition(std::move(block_of), m + 2, std::move(arcs)),
          std::move(pre), std::move(chain)};
}

DiverseLattice SolveDiverseLattice(const ProductLattice& lat, int k,
                                   const Measure& measure, Backend backend,
                                   const DumpRequest& dumps) {
  JoinIrreducibles irr = FindJoinIrreducibles(lat);
  ChainBlocks cb = BuildChainBlocks(lat, irr);
  ReductionMap r = Lift(cb.pre, cb.partition);

  DiverseLattice out;
  out.result =
      SolveDiverse(cb.partition.block_poset, r, measure, backend, k, dumps);
  out.num_irreducibles = static_cast<int>(irr.points.size());
  std::map<std::vector<ElementId>, LatticePoint> point_of;
  for (const auto& x : lat.members()) point_of[lat.AsSet(x)] = x;
  for (const auto& set : out.result.tuple.sets) {
    auto it = point_of.find(set);
    if (it == point_of.end()) {
      throw InternalError("returned set is not a lattice member");
    }
    out.points.push_back(it->second);
  }
  return out;
}

}  // namespace kdiverse
