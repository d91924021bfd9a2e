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

#ifndef KDIVERSE_TOTAL_ORDERS_H_
#define KDIVERSE_TOTAL_ORDERS_H_

#include <cstdint>
#include <istream>
#include <vector>

#include "kdiverse/diverse.h"
#include "kdiverse/poset.h"
#include "kdiverse/ring_family.h"

namespace kdiverse {

// A member of the product: one position per coordinate (0 = lowest).
using LatticePoint = std::vector<int>;

// Explicit sublattice of a product of total orders. Orders are given by
// their sizes; element labels only matter to the parser and the CLI.
class ProductLattice {
 public:
  // Deduplicates and sorts members, then checks ranges and closure under
  // componentwise min and max. Throws InvalidArgumentError.
  static ProductLattice Create(std::vector<int> order_sizes,
                               std::vector<LatticePoint> members);

  int num_orders() const { return static_cast<int>(sizes_.size()); }
  int order_size(int i) const { return sizes_[i]; }
  const std::vector<LatticePoint>& members() const { return members_; }
  // Ground element of position `pos` in order `i` (disjoint union).
  int GroundElement(int i, int pos) const { return offset_[i] + pos; }
  int ground_size() const { return offset_.back(); }
  // A member as a q-subset of the ground set, sorted.
  std::vector<ElementId> AsSet(const LatticePoint& x) const;

  static LatticePoint Meet(const LatticePoint& a, const LatticePoint& b);
  static LatticePoint Join(const LatticePoint& a, const LatticePoint& b);

 private:
  std::vector<int> sizes_;
  std::vector<int> offset_;
  std::vector<LatticePoint> members_;
};

// Parses {"orders": [[label...]...], "members": [[label per order]...]}.
// Labels are listed in increasing order and copied to `labels` when given.
// Throws ParseError.
ProductLattice ParseLatticeJson(
    std::istream& in, std::vector<std::vector<int64_t>>* labels = nullptr);

struct JoinIrreducibles {
  std::vector<LatticePoint> points;  // in a linear extension of the order
  std::vector<std::pair<int, int>> below;  // (i, j): points[i] < points[j]
};

// Members that are not the minimum and not a join of two other members.
JoinIrreducibles FindJoinIrreducibles(const ProductLattice& lat);

struct ChainBlocks {
  BlockPartition partition;
  PreReductionMap pre;
  std::vector<LatticePoint> chain;  // Y_0 < Y_1 < ... < Y_m
};

// Ring ground set: order i owns positions offset_i + i + (0..size_i), the
// last one being the order's top. Block j + 1 is P(Y_j) minus P(Y_{j-1}).
ChainBlocks BuildChainBlocks(const ProductLattice& lat,
                             const JoinIrreducibles& irr);

struct DiverseLattice {
  DiverseResult result;
  std::vector<LatticePoint> points;
  int num_irreducibles = 0;
};

// Every returned set is checked to be a member (InternalError).
DiverseLattice SolveDiverseLattice(const ProductLattice& lat, int k,
                                   const Measure& measure, Backend backend,
                                   const DumpRequest& dumps = {});

}  // namespace kdiverse

#endif  // KDIVERSE_TOTAL_ORDERS_H_
