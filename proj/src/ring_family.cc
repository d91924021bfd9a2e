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

#include "kdiverse/ring_family.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "kdiverse/errors.h"

namespace kdiverse {

std::vector<std::vector<RingElement>> BlockPartition::Members() const {
  std::vector<std::vector<RingElement>> out(num_blocks);
  for (RingElement x = 0; x < static_cast<int>(block_of.size()); ++x) {
    out[block_of[x]].push_back(x);
  }
  return out;
}

BlockPartition MakeBlockPartition(std::vector<int> block_of, int num_blocks,
                                  std::vector<Arc> interior_arcs) {
  if (num_blocks < 2) throw InvalidArgumentError("need at least two blocks");
  std::vector<int> size(num_blocks, 0);
  for (int b : block_of) {
    if (b < 0 || b >= num_blocks) {
      throw InvalidArgumentError("block id " + std::to_string(b) +
                                 " out of range");
    }
    ++size[b];
  }
  for (int b = 0; b < num_blocks; ++b) {
    if (size[b] == 0) {
      throw InvalidArgumentError("block " + std::to_string(b) + " is empty");
    }
  }

  std::set<Arc> arcs;
  std::vector<bool> has_in(num_blocks, false), has_out(num_blocks, false);
  for (const Arc& a : interior_arcs) {
    if (a.tail < 2 || a.head < 2 || a.tail >= num_blocks ||
        a.head >= num_blocks) {
      throw InvalidArgumentError("block arc leaves the interior");
    }
    if (a.tail == a.head) continue;
    arcs.insert(a);
    has_out[a.tail] = true;
    has_in[a.head] = true;
  }
  for (int b = 2; b < num_blocks; ++b) {
    if (!has_in[b]) arcs.insert({kTop, b});
    if (!has_out[b]) arcs.insert({b, kBottom});
  }
  if (num_blocks == 2) arcs.insert({kTop, kBottom});

  BlockPartition part{std::move(block_of), num_blocks,
                      PosetDag::Create(num_blocks, {arcs.begin(), arcs.end()})};
  return part;
}

ReductionMap Lift(const PreReductionMap& pre, const BlockPartition& partition) {
  const int ground = static_cast<int>(partition.block_of.size());
  std::vector<ElementImage> images;
  images.reserve(pre.size());
  for (size_t e = 0; e < pre.size(); ++e) {
    const PreImage& img = pre[e];
    if (img.plus < 0 || img.plus >= ground || img.minus < 0 ||
        img.minus >= ground) {
      throw InvalidArgumentError("pre-image of element " + std::to_string(e) +
                                 " is not covered by the partition");
    }
    images.push_back(
        {partition.block_of[img.plus], partition.block_of[img.minus]});
  }
  return ReductionMap::Create(partition.block_poset, std::move(images));
}

std::vector<ElementId> SupPre(const std::vector<bool>& member,
                              const PreReductionMap& pre) {
  std::vector<ElementId> out;
  for (size_t e = 0; e < pre.size(); ++e) {
    if (member[pre[e].plus] && !member[pre[e].minus]) {
      out.push_back(static_cast<ElementId>(e));
    }
  }
  return out;
}

AugmentedFamily AugmentTerminals(RingFamily family) {
  if (family.members.empty()) {
    throw InvalidArgumentError("ring family is empty");
  }
  AugmentedFamily out;
  const int n = family.ground_size;
  std::vector<int> count(n, 0);
  for (auto& m : family.members) {
    std::sort(m.begin(), m.end());
    for (RingElement x : m) {
      if (x < 0 || x >= n) throw InvalidArgumentError("member leaves ground");
      ++count[x];
    }
  }
  const int num_members = static_cast<int>(family.members.size());
  bool min_empty = std::none_of(count.begin(), count.end(),
                                [&](int c) { return c == num_members; });
  bool max_full = std::all_of(count.begin(), count.end(),
                              [](int c) { return c > 0; });
  if (min_empty) {
    out.added_bottom = family.ground_size++;
    for (auto& m : family.members) m.push_back(*out.added_bottom);
  }
  if (max_full) out.added_top = family.ground_size++;
  out.family = std::move(family);
  return out;
}

}  // namespace kdiverse
