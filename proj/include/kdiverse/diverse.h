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

#ifndef KDIVERSE_DIVERSE_H_
#define KDIVERSE_DIVERSE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdiverse/convex.h"
#include "kdiverse/framework.h"
#include "kdiverse/poset.h"

namespace kdiverse {

enum class MeasureKind { kSum, kCov, kTable };

// The diversity measure being maximized. For kTable the measure is
// -sum_e phi(mu_e) with phi given by `table`.
struct Measure {
  MeasureKind kind = MeasureKind::kSum;
  std::optional<ConvexSpec> table;

  static Measure Sum() { return {MeasureKind::kSum, std::nullopt}; }
  static Measure Cov() { return {MeasureKind::kCov, std::nullopt}; }
  static Measure Table(ConvexSpec phi) { return {MeasureKind::kTable, phi}; }
  std::string Name() const;
};

enum class Backend { kMcf, kCut, kAuto };

std::string BackendName(Backend backend);

// auto resolves to cut for sum/cov and mcf for table. Throws ConfigError for
// a table measure on the cut backend.
Backend ResolveBackend(const Measure& measure, Backend backend);

// The penalty phi handed to a backend: sum -> x^2 (mcf) or binom (cut),
// cov -> max{0,x-1}, table -> the table.
ConvexSpec PenaltyFor(const Measure& measure, Backend resolved);

// Diversity of a tuple: d_sum, d_cov, or -d*_phi for a table.
int64_t Diversity(const SolutionTuple& tuple, const Measure& measure);

// Optional debug dumps of the reductions built for the same instance.
struct DumpRequest {
  bool mcf = false;  // min-cost-flow network as JSON
  bool cut = false;  // layered cut network as DOT; sum/cov only
};

struct DiverseResult {
  SolutionTuple tuple;
  int64_t diversity = 0;
  int q = 0;
  Backend backend = Backend::kMcf;
  int instance_vertices = 0;
  int instance_arcs = 0;
  int dropped_elements = 0;
  std::string mcf_json;
  std::string cut_dot;
};

// Builds the k-potential instance from (poset, r), solves it with the chosen
// backend and maps the minimum potential back to k solutions.
DiverseResult SolveDiverse(const PosetDag& poset, const ReductionMap& r,
                           const Measure& measure, Backend backend, int k,
                           const DumpRequest& dumps = {});

}  // namespace kdiverse

#endif  // KDIVERSE_DIVERSE_H_
