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

#ifndef KDIVERSE_CONVEX_H_
#define KDIVERSE_CONVEX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kdiverse {

enum class ConvexKind {
  kSquare,  // x^2
  kBinom,   // x(x-1)/2
  kCov,     // max{0, x-1}
  kTable,   // explicit values on [0, k_bound]
};

// A discrete convex function phi with phi(0) = 0 that is non-decreasing on
// the nonnegative integers. Only ever evaluated on [0, k]; nothing is stored
// for arguments outside that range.
class ConvexSpec {
 public:
  static ConvexSpec Square();
  static ConvexSpec Binom();
  static ConvexSpec Cov();
  // Throws InvalidArgumentError listing every violated condition.
  static ConvexSpec FromTable(std::vector<int64_t> values);

  ConvexKind kind() const { return kind_; }
  // Largest valid argument; nullopt for the closed forms.
  std::optional<int> k_bound() const;
  const std::vector<int64_t>& table() const { return table_; }

  // Throws std::out_of_range for x < 0 or x > k_bound.
  int64_t Eval(int64_t x) const;

  std::string Name() const;

 private:
  explicit ConvexSpec(ConvexKind kind) : kind_(kind) {}

  ConvexKind kind_;
  std::vector<int64_t> table_;
};

struct TableViolation {
  enum class Kind { kNonZeroOrigin, kDecreasing, kNonConvex };
  Kind kind;
  int index;
  std::string ToString() const;
};

// All violations of phi(0) = 0, monotonicity (reported at the index whose
// value drops) and grid convexity phi(x-1) + phi(x+1) >= 2 phi(x).
std::vector<TableViolation> TableViolations(std::span<const int64_t> values);

struct InteriorBreakpoint {
  int point;
  int64_t left_slope;   // phi(b) - phi(b-1)
  int64_t right_slope;  // phi(b+1) - phi(b)
};

// B_k(phi) = (breakpoints of phi in [0,k]) U {0,k}, sorted.
struct BreakpointProfile {
  std::vector<int> points;
  // Breakpoints strictly inside (0, k), in increasing order.
  std::vector<InteriorBreakpoint> interior;
  // Slope on [0, 1] and on [k-1, k].
  int64_t first_slope = 0;
  int64_t last_slope = 0;
};

BreakpointProfile BreakpointsK(const ConvexSpec& spec, int k);

}  // namespace kdiverse

#endif  // KDIVERSE_CONVEX_H_
