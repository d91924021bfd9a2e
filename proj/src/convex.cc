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

#include "kdiverse/convex.h"

#include <stdexcept>
#include <string>

#include "kdiverse/errors.h"

namespace kdiverse {

ConvexSpec ConvexSpec::Square() { return ConvexSpec(ConvexKind::kSquare); }
ConvexSpec ConvexSpec::Binom() { return ConvexSpec(ConvexKind::kBinom); }
ConvexSpec ConvexSpec::Cov() { return ConvexSpec(ConvexKind::kCov); }

ConvexSpec ConvexSpec::FromTable(std::vector<int64_t> values) {
  if (values.empty()) {
    throw InvalidArgumentError("convex table is empty");
  }
  const std::vector<TableViolation> violations = TableViolations(values);
  if (!violations.empty()) {
    std::string message = "invalid convex table:";
    for (const TableViolation& v : violations) message += " " + v.ToString();
    throw InvalidArgumentError(message);
  }
  ConvexSpec spec(ConvexKind::kTable);
  spec.table_ = std::move(values);
  return spec;
}

std::optional<int> ConvexSpec::k_bound() const {
  if (kind_ != ConvexKind::kTable) return std::nullopt;
  return static_cast<int>(table_.size()) - 1;
}

int64_t ConvexSpec::Eval(int64_t x) const {
  if (x < 0) {
    throw std::out_of_range("convex function evaluated at negative argument " +
                            std::to_string(x));
  }
  switch (kind_) {
    case ConvexKind::kSquare:
      return CheckedMul(x, x, "x^2");
    case ConvexKind::kBinom:
      return CheckedMul(x, x - 1, "binom(x,2)") / 2;
    case ConvexKind::kCov:
      return x > 0 ? x - 1 : 0;
    case ConvexKind::kTable:
      if (x >= static_cast<int64_t>(table_.size())) {
        throw std::out_of_range("convex table has no value at " +
                                std::to_string(x));
      }
      return table_[x];
  }
  return 0;
}

std::string ConvexSpec::Name() const {
  switch (kind_) {
    case ConvexKind::kSquare:
      return "square";
    case ConvexKind::kBinom:
      return "binom";
    case ConvexKind::kCov:
      return "cov";
    case ConvexKind::kTable:
      return "table";
  }
  return "";
}

std::string TableViolation::ToString() const {
  const char* what = kind == Kind::kNonZeroOrigin ? "nonzero value at 0"
                     : kind == Kind::kDecreasing  ? "decreasing at index"
                                                  : "not convex at index";
  if (kind == Kind::kNonZeroOrigin) return what;
  return std::string(what) + " " + std::to_string(index);
}

std::vector<TableViolation> TableViolations(std::span<const int64_t> values) {
  std::vector<TableViolation> out;
  if (values.empty()) return out;
  if (values[0] != 0) out.push_back({TableViolation::Kind::kNonZeroOrigin, 0});
  for (size_t x = 1; x < values.size(); ++x) {
    if (values[x] < values[x - 1]) {
      out.push_back({TableViolation::Kind::kDecreasing, static_cast<int>(x)});
    }
  }
  for (size_t x = 1; x + 1 < values.size(); ++x) {
    if (values[x - 1] + values[x + 1] < 2 * values[x]) {
      out.push_back({TableViolation::Kind::kNonConvex, static_cast<int>(x)});
    }
  }
  return out;
}

BreakpointProfile BreakpointsK(const ConvexSpec& spec, int k) {
  if (k < 1) throw InvalidArgumentError("breakpoints need k >= 1");
  if (spec.k_bound() && *spec.k_bound() < k) {
    throw InvalidArgumentError("convex table covers [0," +
                               std::to_string(*spec.k_bound()) +
                               "] but k = " + std::to_string(k));
  }
  BreakpointProfile profile;
  profile.points.push_back(0);
  for (int x = 1; x < k; ++x) {
    const int64_t left = spec.Eval(x) - spec.Eval(x - 1);
    const int64_t right = spec.Eval(x + 1) - spec.Eval(x);
    if (left != right) {
      profile.points.push_back(x);
      profile.interior.push_back({x, left, right});
    }
  }
  profile.points.push_back(k);
  profile.first_slope = spec.Eval(1) - spec.Eval(0);
  profile.last_slope = spec.Eval(k) - spec.Eval(k - 1);
  return profile;
}

}  // namespace kdiverse
