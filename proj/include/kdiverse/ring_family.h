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

#ifndef KDIVERSE_RING_FAMILY_H_
#define KDIVERSE_RING_FAMILY_H_

#include <optional>
#include <vector>

#include "kdiverse/framework.h"
#include "kdiverse/poset.h"

namespace kdiverse {

// Index of an element of the ring family's ground set R.
using RingElement = int;

// Partition of R into blocks: block 0 holds the minimal member X_bot, block 1
// the complement of the maximal member, blocks 2.. the Birkhoff blocks. The
// block poset has bottom 0 and top 1.
struct BlockPartition {
  std::vector<int> block_of;  // indexed by RingElement
  int num_blocks = 2;
  PosetDag block_poset;

  std::vector<std::vector<RingElement>> Members() const;
};

// Validates the block assignment (both terminal blocks nonempty, ids in
// range) and builds the block poset from arcs among interior blocks (larger
// to smaller). Terminal blocks are wired as top -> x for every interior block
// x without interior predecessors and x -> bottom for every interior block x
// without interior successors; top -> bottom when there is no interior.
BlockPartition MakeBlockPartition(std::vector<int> block_of, int num_blocks,
                                  std::vector<Arc> interior_arcs);

// Per ground element e, the pair (e_hat+, e_hat-) of elements of R.
struct PreImage {
  RingElement plus = 0;
  RingElement minus = 0;
};
using PreReductionMap = std::vector<PreImage>;

// r(e) = (block of e_hat+, block of e_hat-). Throws InvalidArgumentError if
// an image element lies outside the partition or violates e+ <= e-.
ReductionMap Lift(const PreReductionMap& pre, const BlockPartition& partition);

// sup over a family member X: { e : e_hat+ in X, e_hat- not in X }.
std::vector<ElementId> SupPre(const std::vector<bool>& member,
                              const PreReductionMap& pre);

// An explicitly listed set family over {0..ground_size-1}. Desk scale only.
struct RingFamily {
  int ground_size = 0;
  std::vector<std::vector<RingElement>> members;  // each sorted
};

struct AugmentedFamily {
  RingFamily family;
  std::optional<RingElement> added_bottom;
  std::optional<RingElement> added_top;
};

// Adds a fresh bottom element to R and to every member when the minimal
// member is empty, and a fresh top element to R alone when the maximal member
// is all of R. Throws InvalidArgumentError on an empty family.
AugmentedFamily AugmentTerminals(RingFamily family);

}  // namespace kdiverse

#endif  // KDIVERSE_RING_FAMILY_H_
