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

#include "kdiverse/cli.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdiverse/diverse.h"
#include "kdiverse/errors.h"
#include "kdiverse/mincut.h"
#include "kdiverse/oracle.h"
#include "kdiverse/stable_matching.h"
#include "kdiverse/total_orders.h"

namespace kdiverse::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string problem;  // mincut | sm | lattice
  int k = 0;
  std::string measure = "sum";
  std::string backend = "auto";
  std::string input;
  std::string output = "-";
  std::string dump_mcf;
  std::string dump_cut;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

ConvexSpec ParseTable(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::vector<int64_t> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    int64_t v;
    std::string rest;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(ls >> v) || (ls >> rest)) {
      throw ParseError(line_no, "expected one integer per line");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ParseError(0, "empty table " + path);
  std::vector<TableViolation> bad = TableViolations(values);
  if (!bad.empty()) {
    std::string msg = "table " + path + ":";
    for (const auto& v : bad) msg += " " + v.ToString();
    throw ParseError(0, msg);
  }
  return ConvexSpec::FromTable(std::move(values));
}

Measure ParseMeasure(const std::string& text, int k) {
  if (text == "sum") return Measure::Sum();
  if (text == "cov") return Measure::Cov();
  if (text.rfind("table:", 0) == 0) {
    ConvexSpec phi = ParseTable(text.substr(6));
    if (*phi.k_bound() < k) {
      throw ConfigError("table covers [0," + std::to_string(*phi.k_bound()) +
                        "] but k = " + std::to_string(k));
    }
    return Measure::Table(std::move(phi));
  }
  throw ConfigError("unknown measure '" + text + "'");
}

Backend ParseBackend(const std::string& text) {
  if (text == "mcf") return Backend::kMcf;
  if (text == "cut") return Backend::kCut;
  if (text == "auto") return Backend::kAuto;
  throw ConfigError("unknown backend '" + text + "'");
}

void WriteText(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
}

// An input parsed once, with solve/oracle entry points and element naming.
struct Problem {
  std::function<DiverseResult(int, const Measure&, Backend,
                              const DumpRequest&)>
      solve;
  std::function<oracle::SetFamily()> enumerate;
  std::function<json(ElementId)> name;
  std::function<json(const std::vector<ElementId>&)> describe;
  std::function<int()> ground_size;
  std::function<std::string()> dump;  // the instance in its input format
  std::function<bool()> shrink;       // drop one part; false when done
  std::function<void()> undo;         // revert the last shrink
};

json Solutions(const Problem& p,
               const std::vector<std::vector<ElementId>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(p.describe(s));
  return out;
}

std::string DimacsText(const Digraph& g) {
  std::ostringstream o;
  o << "p max " << g.num_vertices << " " << g.arcs.size() << "\n";
  o << "n " << g.source + 1 << " s\nn " << g.sink + 1 << " t\n";
  for (const Arc& a : g.arcs) o << "a " << a.tail + 1 << " " << a.head + 1 << "\n";
  return o.str();
}

Problem MinCutProblem(const std::string& path) {
  std::ifstream in = OpenInput(path);
  auto g = std::make_shared<Digraph>(ParseDimacs(in));
  ValidateDigraph(*g);
  auto removed = std::make_shared<std::vector<std::pair<size_t, Arc>>>();
  auto cursor = std::make_shared<size_t>(0);
  Problem p;
  p.solve = [g](int k, const Measure& m, Backend b, const DumpRequest& d) {
    return SolveDiverseMinCut(*g, k, m, b, d).result;
  };
  p.enumerate = [g] { return oracle::EnumMinCuts(*g); };
  p.name = [](ElementId e) { return json(e + 1); };
  p.describe = [p](const std::vector<ElementId>& s) {
    json a = json::array();
    for (ElementId e : s) a.push_back(p.name(e));
    return a;
  };
  p.ground_size = [g] { return static_cast<int>(g->arcs.size()); };
  p.dump = [g] { return DimacsText(*g); };
  p.shrink = [g, removed, cursor] {
    if (*cursor >= g->arcs.size()) return false;
    removed->push_back({*cursor, g->arcs[*cursor]});
    g->arcs.erase(g->arcs.begin() + *cursor);
    return true;
  };
  p.undo = [g, removed, cursor] {
    auto [pos, arc] = removed->back();
    removed->pop_back();
    g->arcs.insert(g->arcs.begin() + pos, arc);
    ++*cursor;
  };
  return p;
}

Problem SmProblem(const std::string& path) {
  std::ifstream in = OpenInput(path);
  auto inst = std::make_shared<SmInstance>(ParsePreferences(in));
  const int n = inst->n();
  Problem p;
  p.solve = [inst](int k, const Measure& m, Backend b, const DumpRequest& d) {
    return SolveDiverseSm(*inst, k, m, b, d).result;
  };
  p.enumerate = [inst] {
    oracle::SetFamily sets;
    for (const auto& m : oracle::EnumStableMatchings(*inst)) {
      sets.push_back(SetFromMatching(m));
    }
    return sets;
  };
  p.name = [n](ElementId e) { return json::array({e / n + 1, e % n + 1}); };
  p.describe = [p](const std::vector<ElementId>& s) {
    json a = json::array();
    for (ElementId e : s) a.push_back(p.name(e));
    return a;
  };
  p.ground_size = [n] { return n * n; };
  p.dump = [inst] {
    std::ostringstream o;
    o << inst->n() << "\n";
    auto list = [&](const std::vector<int>& l) {
      for (size_t i = 0; i < l.size(); ++i) o << (i ? " " : "") << l[i] + 1;
      o << "\n";
    };
    for (int u = 0; u < inst->n(); ++u) list(inst->pref_u(u));
    for (int v = 0; v < inst->n(); ++v) list(inst->pref_v(v));
    return o.str();
  };
  p.shrink = [] { return false; };
  p.undo = [] {};
  return p;
}

Problem LatticeProblem(const std::string& path) {
  std::ifstream in = OpenInput(path);
  auto labels = std::make_shared<std::vector<std::vector<int64_t>>>();
  auto lat = std::make_shared<ProductLattice>(ParseLatticeJson(in, labels.get()));
  auto saved = std::make_shared<std::vector<ProductLattice>>();
  auto cursor = std::make_shared<size_t>(0);
  Problem p;
  p.solve = [lat](int k, const Measure& m, Backend b, const DumpRequest& d) {
    return SolveDiverseLattice(*lat, k, m, b, d).result;
  };
  p.enumerate = [lat] {
    oracle::SetFamily sets;
    for (const auto& x : lat->members()) sets.push_back(lat->AsSet(x));
    return sets;
  };
  // Ground element -> (order, label).
  p.name = [lat, labels](ElementId e) {
    int i = 0;
    while (e >= lat->GroundElement(i, lat->order_size(i))) ++i;
    return json((*labels)[i][e - lat->GroundElement(i, 0)]);
  };
  p.describe = [p](const std::vector<ElementId>& s) {
    json a = json::array();
    for (ElementId e : s) a.push_back(p.name(e));
    return a;
  };
  p.ground_size = [lat] { return lat->ground_size(); };
  p.dump = [lat, labels] {
    json doc;
    doc["orders"] = *labels;
    json members = json::array();
    for (const auto& x : lat->members()) {
      json m = json::array();
      for (size_t i = 0; i < x.size(); ++i) m.push_back((*labels)[i][x[i]]);
      members.push_back(m);
    }
    doc["members"] = members;
    return doc.dump() + "\n";
  };
  p.shrink = [lat, saved, cursor] {
    while (*cursor < lat->members().size()) {
      std::vector<LatticePoint> rest = lat->members();
      rest.erase(rest.begin() + *cursor);
      if (rest.empty()) return false;
      std::vector<int> sizes;
      for (int i = 0; i < lat->num_orders(); ++i) {
        sizes.push_back(lat->order_size(i));
      }
      try {
        ProductLattice smaller = ProductLattice::Create(sizes, rest);
        saved->push_back(*lat);
        *lat = std::move(smaller);
        return true;
      } catch (const InvalidArgumentError&) {
        ++*cursor;
      }
    }
    return false;
  };
  p.undo = [lat, saved, cursor] {
    *lat = saved->back();
    saved->pop_back();
    ++*cursor;
  };
  return p;
}

Problem LoadProblem(const std::string& kind, const std::string& path) {
  if (kind == "mincut") return MinCutProblem(path);
  if (kind == "sm") return SmProblem(path);
  if (kind == "lattice") return LatticeProblem(path);
  throw ConfigError("unknown problem '" + kind + "'");
}

int Solve(const RunConfig& cfg, std::ostream& out) {
  Measure measure = ParseMeasure(cfg.measure, cfg.k);
  Backend backend = ParseBackend(cfg.backend);
  ResolveBackend(measure, backend);
  if (!cfg.dump_cut.empty() && measure.kind == MeasureKind::kTable) {
    throw ConfigError("--dump-cut needs measure sum or cov");
  }
  Problem p = LoadProblem(cfg.problem, cfg.input);
  DumpRequest dumps{!cfg.dump_mcf.empty(), !cfg.dump_cut.empty()};

  auto start = std::chrono::steady_clock::now();
  DiverseResult r = p.solve(cfg.k, measure, backend, dumps);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();

  json doc;
  doc["problem"] = cfg.problem;
  doc["k"] = cfg.k;
  doc["measure"] = measure.Name();
  doc["backend"] = BackendName(r.backend);
  doc["q"] = r.q;
  doc["diversity"] = r.diversity;
  doc["solutions"] = Solutions(p, r.tuple.sets);
  doc["stats"] = {{"vertices", r.instance_vertices},
                  {"arcs", r.instance_arcs},
                  {"ground_size", p.ground_size()},
                  {"dropped_elements", r.dropped_elements},
                  {"solve_ms", ms}};
  WriteText(cfg.output, doc.dump(2) + "\n", out);
  if (dumps.mcf) WriteText(cfg.dump_mcf, r.mcf_json + "\n", out);
  if (dumps.cut) WriteText(cfg.dump_cut, r.cut_dot, out);
  return kExitOk;
}

int RunOracle(const RunConfig& cfg, std::ostream& out) {
  Measure measure = ParseMeasure(cfg.measure, cfg.k);
  Problem p = LoadProblem(cfg.problem, cfg.input);
  oracle::SetFamily all = p.enumerate();
  oracle::Report rep = oracle::BestKTuple(all, cfg.k, measure);
  oracle::SetFamily tuple;
  for (int i : rep.tuple) tuple.push_back(all[i]);
  json doc;
  doc["problem"] = cfg.problem;
  doc["k"] = cfg.k;
  doc["measure"] = measure.Name();
  doc["num_solutions"] = all.size();
  doc["diversity"] = rep.optimum;
  doc["optimal_tuples"] = rep.count;
  doc["solutions"] = Solutions(p, tuple);
  WriteText(cfg.output, doc.dump(2) + "\n", out);
  return kExitOk;
}

// Optimum per route; the routes are mcf, cut (sum/cov only) and the oracle.
std::vector<std::pair<std::string, int64_t>> Routes(Problem& p, int k,
                                                    const Measure& m) {
  std::vector<std::pair<std::string, int64_t>> v;
  v.push_back({"mcf", p.solve(k, m, Backend::kMcf, {}).diversity});
  if (m.kind != MeasureKind::kTable) {
    v.push_back({"cut", p.solve(k, m, Backend::kCut, {}).diversity});
  }
  v.push_back({"oracle", oracle::BestKTuple(p.enumerate(), k, m).optimum});
  return v;
}

bool Agree(const std::vector<std::pair<std::string, int64_t>>& v) {
  for (const auto& x : v) {
    if (x.second != v.front().second) return false;
  }
  return true;
}

bool StillFails(Problem& p, int k, const Measure& m) {
  try {
    return !Agree(Routes(p, k, m));
  } catch (const Error&) {
    return true;
  }
}

int RunSelftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Measure measure = ParseMeasure(cfg.measure, cfg.k);
  Problem p = LoadProblem(cfg.problem, cfg.input);
  json doc;
  doc["problem"] = cfg.problem;
  doc["k"] = cfg.k;
  doc["measure"] = measure.Name();
  bool ok = true;
  try {
    auto routes = Routes(p, cfg.k, measure);
    for (const auto& [name, value] : routes) doc["optimum"][name] = value;
    ok = Agree(routes);
  } catch (const TooLargeError&) {
    throw;
  } catch (const Error& e) {
    doc["error"] = e.what();
    ok = false;
  }
  doc["agree"] = ok;
  WriteText(cfg.output, doc.dump(2) + "\n", out);
  if (ok) return kExitOk;

  // Greedily drop parts of the instance while the disagreement persists.
  while (p.shrink()) {
    if (!StillFails(p, cfg.k, measure)) p.undo();
  }
  err << "selftest disagreement; reproduction (" << cfg.problem
      << ", k=" << cfg.k << ", measure=" << measure.Name() << "):\n"
      << p.dump();
  return kExitInternal;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"k maximally diverse solutions for min cuts, stable matchings "
               "and sublattices of products of total orders"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "number of solutions")->required();
    sub->add_option("--measure", cfg.measure, "sum, cov or table:<path>");
    sub->add_option("--output", cfg.output, "report path, - for stdout");
    sub->add_option("input", cfg.input, "instance file")->required();
  };
  for (const char* name : {"mincut", "sm", "lattice"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("solve a ") + name +
                                                 " instance");
    common(sub);
    sub->add_option("--backend", cfg.backend, "mcf, cut or auto");
    sub->add_option("--dump-mcf", cfg.dump_mcf, "write the flow network");
    sub->add_option("--dump-cut", cfg.dump_cut, "write the cut network");
    sub->callback([&cfg, name] { cfg.problem = name; });
  }
  CLI::App* orc = app.add_subcommand("oracle", "exhaustive optimum");
  CLI::App* self = app.add_subcommand("selftest", "compare every route");
  for (CLI::App* sub : {orc, self}) {
    common(sub);
    sub->add_option("--problem", cfg.problem, "mincut, sm or lattice")
        ->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (cfg.k < 1) throw ConfigError("--k must be at least 1");
    if (orc->parsed()) return RunOracle(cfg, out);
    if (self->parsed()) return RunSelftest(cfg, out, err);
    return Solve(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidArgumentError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const TooLargeError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace kdiverse::cli
