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

#include "kdiverse/diverse.h"

#include "kdiverse/cut_backend.h"
#include "kdiverse/errors.h"
#include "kdiverse/mcf_backend.h"

namespace kdiverse {

std::string Measure::Name() const {
  switch (kind) {
    case MeasureKind::kSum:
      return "sum";
    case MeasureKind::kCov:
      return "cov";
    case MeasureKind::kTable:
      return "table";
  }
  return "?";
}

std::string BackendName(Backend backend) {
  switch (backend) {
    case Backend::kMcf:
      return "mcf";
    case Backend::kCut:
      return "cut";
    case Backend::kAuto:
      return "auto";
  }
  return "?";
}

Backend ResolveBackend(const Measure& measure, Backend backend) {
  if (measure.kind == MeasureKind::kTable) {
    if (backend == Backend::kCut) {
      throw ConfigError("a table measure needs the mcf backend");
    }
    return Backend::kMcf;
  }
  return backend == Backend::kAuto ? Backend::kCut : backend;
}

ConvexSpec PenaltyFor(const Measure& measure, Backend resolved) {
  switch (measure.kind) {
    case MeasureKind::kSum:
      return resolved == Backend::kCut ? ConvexSpec::Binom()
                                       : ConvexSpec::Square();
    case MeasureKind::kCov:
      return ConvexSpec::Cov();
    case MeasureKind::kTable:
      if (!measure.table) throw ConfigError("table measure without a table");
      return *measure.table;
  }
  throw InternalError("unknown measure");
}

int64_t Diversity(const SolutionTuple& tuple, const Measure& measure) {
  switch (measure.kind) {
    case MeasureKind::kSum:
      return DSum(tuple);
    case MeasureKind::kCov:
      return DCov(tuple);
    case MeasureKind::kTable:
      return -DPhiStar(tuple, *measure.table);
  }
  throw InternalError("unknown measure");
}

DiverseResult SolveDiverse(const PosetDag& poset, const ReductionMap& r,
                           const Measure& measure, Backend backend, int k,
                           const DumpRequest& dumps) {
  if (k < 1) throw InvalidArgumentError("k must be at least 1");
  const Backend resolved = ResolveBackend(measure, backend);
  const ConvexSpec phi = PenaltyFor(measure, resolved);
  KPotentialInstance inst = KPotentialInstance::Build(poset, r, phi, k);

  PotentialSolution sol = resolved == Backend::kCut
                              ? SolveMinKPotentialCut(inst)
                              : SolveMinKPotentialMcf(inst);

  DiverseResult out;
  out.tuple = SolutionsFromPotential(sol.potential, inst);
  if (DPhiStar(out.tuple, phi) != sol.h) {
    throw InternalError("H of the optimal potential differs from its tuple");
  }
  out.diversity = Diversity(out.tuple, measure);
  out.q = out.tuple.q();
  out.backend = resolved;
  out.instance_vertices = inst.num_vertices();
  out.instance_arcs = static_cast<int>(inst.arcs().size());
  out.dropped_elements = inst.num_dropped();
  if (dumps.mcf) {
    out.mcf_json = McfToJson(BuildMcf(KPotentialInstance::Build(
        poset, r, PenaltyFor(measure, Backend::kMcf), k)));
  }
  if (dumps.cut) {
    if (measure.kind == MeasureKind::kTable) {
      throw ConfigError("the cut network exists only for sum and cov");
    }
    out.cut_dot = CutToDot(BuildCut(KPotentialInstance::Build(
        poset, r, PenaltyFor(measure, Backend::kCut), k)));
  }
  return out;
}

}  // namespace kdiverse
