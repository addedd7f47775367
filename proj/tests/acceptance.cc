// Copyright 2026 The ipwdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "ipwdm/costcat.h"
#include "ipwdm/instance_io.h"
#include "ipwdm/metrics.h"
#include "ipwdm/milp.h"
#include "ipwdm/pathgen.h"
#include "ipwdm/solve.h"
#include "oracle.h"

namespace {

using namespace ipwdm;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

struct Built {
  PathCatalog catalog;
  CostCatalog costs;
  Model model;
};

Built Build(const Instance& inst) {
  PathCatalog c = PathCatalog::Build(inst);
  CostCatalog k = CostCatalog::Build(inst);
  Model m = BuildModelFor(inst, c, k);
  return {std::move(c), std::move(k), std::move(m)};
}

Outcome CostCatalogArithmetic() {
  std::ostringstream bad;
  if (MakeLambdaType(10).cost != Cost::FromMicros(3'000'000)) bad << " 10G lambda;";
  if (MakeLambdaType(100).cost != Cost::FromMicros(16'000'000)) bad << " 100G lambda;";
  bool found = false;
  for (const VirtualNodeModule& m : EnumerateVirtualModules()) {
    if (m.type == RouterType::kType1 && m.slots == 35) {
      found = true;
      if (m.cost != Cost::FromMicros(901'750'000)) bad << " Type1-35 = " << m.cost.ToString() << ";";
    }
  }
  if (!found) bad << " no Type1-35 module;";
  const std::vector<PhysicalNodeModule> mods = PhysicalModules();
  const std::vector<oracle::RefCrossConnect> table = oracle::CrossConnects();
  if (mods.size() != table.size()) {
    bad << " " << mods.size() << " cross-connect modules;";
  } else {
    for (size_t k = 0; k < mods.size(); ++k) {
      if (mods[k].fibers != table[k].fibers || mods[k].add_drop_ports != table[k].ports ||
          mods[k].cost != Cost::FromMicros(table[k].micros)) {
        bad << " " << mods[k].name << ";";
      }
    }
  }
  if (bad.str().empty()) {
    return {true, "Type1-35 901.75, lambdas 3 and 16, 10 cross-connect modules exact"};
  }
  return {false, "mismatch:" + bad.str()};
}

Outcome OpacityTable() {
  struct Row {
    double f_ip, f_wdm, phi;
  };
  const Row rows[] = {{180, 4039, 4.3},   {210, 4259, 4.7},   {188, 6628, 2.8},
                      {205, 7447, 2.7},   {1060, 6740, 13.6}, {1393, 7242, 16.1},
                      {1171, 11682, 9.1}, {1375, 13549, 9.2}};
  double worst = 0;
  for (const Row& r : rows) {
    const auto phi = Opacity(r.f_ip, r.f_wdm);
    if (!phi) return {false, "undefined opacity"};
    worst = std::max(worst, std::abs(*phi - r.phi));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "8 published pairs, max |phi - published| = %.4f", worst);
  return {worst <= 0.05, buf};
}

struct TinyCase {
  Instance instance;
  std::optional<int64_t> oracle;
  std::optional<Cost> exact;
  bool exact_optimal = false;
};

std::vector<TinyCase>& TinyCases() {
  static std::vector<TinyCase> cases;
  return cases;
}

Outcome OracleEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260101);
  int agree = 0, feasible = 0;
  std::ostringstream bad;
  for (int k = 0; k < 24; ++k) {
    Instance inst = fixtures::TinyRandom(rng);
    TinyCase c{inst, oracle::ExhaustiveOptimum(inst), std::nullopt};
    try {
      const Built b = Build(inst);
      const SolveReport r = SolveExact(b.model);
      c.exact_optimal = r.status == SolveStatus::kOptimal;
      if (r.status == SolveStatus::kOptimal) c.exact = r.objective;
      if (r.status == SolveStatus::kUnknown) bad << " case " << k << " hit a limit;";
    } catch (const Error&) {
      c.exact_optimal = true;  // the model builder proved a demand unroutable
    }
    const bool same = c.exact_optimal && (c.oracle.has_value() == c.exact.has_value()) &&
                      (!c.oracle || *c.oracle == c.exact->micros());
    if (same) ++agree;
    else {
      bad << " case " << k << ": oracle "
          << (c.oracle ? Cost::FromMicros(*c.oracle).ToString() : "infeasible") << " exact "
          << (c.exact ? c.exact->ToString() : "none") << ";";
    }
    if (c.oracle) ++feasible;
    TinyCases().push_back(std::move(c));
  }
  const double secs = Seconds(start);
  std::ostringstream d;
  d << agree << "/24 instances equal (" << feasible << " feasible), " << secs << " s" << bad.str();
  return {agree == 24 && secs < 60, d.str()};
}

Outcome HeuristicFeasibility() {
  std::mt19937_64 rng(77);
  int checked = 0, clean = 0, infeasible = 0;
  std::ostringstream bad;
  while (checked < 60) {
    const Instance inst = fixtures::MidRandom(rng);
    std::optional<Built> b;
    try {
      b = Build(inst);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    const SolveReport r = SolveHeuristic(b->model, checked);
    if (!r.best) {
      ++infeasible;
      continue;
    }
    const auto v = CheckFeasibility(b->model, *r.best);
    if (v.empty() && EvaluateCost(b->model, *r.best) == r.objective) ++clean;
    else bad << " instance " << checked << ": " << (v.empty() ? "objective" : v[0].description) << ";";
  }
  int dominated = 0, compared = 0, missed = 0;
  for (const TinyCase& c : TinyCases()) {
    if (!c.exact) continue;
    ++compared;
    const Built b = Build(c.instance);
    const SolveReport h = SolveHeuristic(b.model, 1);
    if (h.best && h.objective >= *c.exact) ++dominated;
    else if (!h.best) {
      ++dominated;
      ++missed;
    }
    else bad << " heuristic " << h.objective.ToString() << " below optimum " << c.exact->ToString() << ";";
  }
  std::ostringstream d;
  d << clean << "/" << (checked - infeasible) << " heuristic solutions feasible on " << checked
    << " mid-size instances (" << infeasible << " unsolved); heuristic >= exact on " << dominated
    << "/" << compared << " (" << missed << " without a heuristic solution)" << bad.str();
  return {checked - infeasible >= 50 && clean == checked - infeasible && dominated == compared,
          d.str()};
}

Instance Triangle() {
  return fixtures::FromText(
      "node a\nnode b\nnode c\npop a b c\n"
      "link ab a b 120\nlink bc b c 90\nlink ac a c 300\n"
      "demand a b 14\ndemand a c 23\ndemand b c 7\n");
}

Outcome ExternalRoundTrip() {
  const fs::path dir = fs::temp_directory_path() / "ipwdm_acceptance";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, Instance>> cases = {
      {"twopop", fixtures::TwoPop(25)}, {"line", fixtures::Line()}, {"triangle", Triangle()}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [name, inst] : cases) {
    const Built b = Build(inst);
    const fs::path lp = dir / (name + ".lp");
    const fs::path sol = dir / (name + ".sol");
    ExportModel(b.model, lp.string());
    fs::remove(sol);
    const std::string cmd = std::string(IPWDM_PYTHON) + " " + IPWDM_HIGHS_SCRIPT + " " +
                            lp.string() + " " + sol.string();
    if (std::system(cmd.c_str()) != 0 || !fs::exists(sol)) {
      d << " " << name << ": external solver failed;";
      ok = false;
      continue;
    }
    const ImportedSolution s = ImportSolutionFile(b.model, sol.string());
    if (!s.missing.empty() || !s.objective) {
      d << " " << name << ": incomplete solution file;";
      ok = false;
      continue;
    }
    const double eval = EvaluateCost(b.model, s.solution).units();
    const SolveReport r = SolveExact(b.model);
    const bool match = std::abs(eval - *s.objective) <= 1e-6 &&
                       r.status == SolveStatus::kOptimal &&
                       std::abs(r.objective.units() - *s.objective) <= 1e-6;
    char buf[160];
    std::snprintf(buf, sizeof buf, " %s: solver %.6f evaluate %.6f exact %s;", name.c_str(),
                  *s.objective, eval, r.objective.ToString().c_str());
    d << buf;
    ok = ok && match;
  }
  return {ok, "3 instances via HiGHS:" + d.str()};
}

Outcome TransparentCore() {
  std::ostringstream d;
  bool ok = true;
  {
    const Instance inst = fixtures::StarOverload(Architecture::kTransparentCore);
    const Built b = Build(inst);
    const SolveReport exact = SolveExact(b.model);
    const SolveReport heur = SolveHeuristic(b.model, 1);
    const bool infeasible =
        exact.status == SolveStatus::kInfeasible && !heur.best && !exact.best;
    d << "(a) star overload: exact " << SolveStatusName(exact.status) << ", heuristic "
      << SolveStatusName(heur.status) << ";";
    ok = ok && infeasible;
  }
  {
    const Instance base = fixtures::Line();
    auto solve = [&](Architecture arch) -> std::optional<TransitReport> {
      ScenarioParams p = base.params();
      p.architecture = arch;
      const Instance inst = base.WithParams(p);
      const Built b = Build(inst);
      const SolveReport r = SolveExact(b.model);
      if (r.status != SolveStatus::kOptimal) return std::nullopt;
      return BuildReport(inst, b.catalog, b.model, *r.best);
    };
    const auto opt = solve(Architecture::kOptimized);
    const auto tc = solve(Architecture::kTransparentCore);
    if (!opt || !tc) {
      d << " (b) exact search did not finish;";
      ok = false;
    } else {
      d << " (b) transparent total " << tc->total_cost.ToString() << " <= optimized total "
        << opt->total_cost.ToString() << ", optimized phi " << FormatOpacity(opt->opacity);
      ok = ok && tc->total_cost <= opt->total_cost && opt->opacity && *opt->opacity == 0.0;
    }
  }
  return {ok, d.str()};
}

Outcome PathCatalogSize() {
  LoadOptions opts;
  opts.pops = {"Hannover", "Frankfurt", "Hamburg",   "Norden",   "Bremen",   "Berlin",
               "Muenchen", "Ulm",       "Nuernberg", "Stuttgart", "Karlsruhe", "Mannheim",
               "Essen",    "Dortmund",  "Duesseldorf", "Koeln",  "Leipzig"};
  opts.drop_foreign_demands = true;
  const Instance inst = LoadInstanceFile(IPWDM_GERMANY50, opts);
  const PathCatalog c = PathCatalog::Build(inst);
  const double dev = 100.0 * (c.num_paths() - 5591) / 5591.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "germany50 %d nodes / %d links, %zu PoPs, %d pairs: |P| = %d vs 5591 (%+.2f%%)",
                inst.graph().num_nodes(), inst.graph().num_edges(), inst.pops().size(),
                c.num_pairs(), c.num_paths(), dev);
  return {std::abs(dev) <= 5.0 && c.num_pairs() == 136, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, CostCatalogArithmetic}, {2, OpacityTable},     {3, OracleEquivalence},
      {4, HeuristicFeasibility},  {5, ExternalRoundTrip}, {6, TransparentCore},
      {7, PathCatalogSize}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d %s (%.2f s): %s\n", id, o.pass ? "PASS" : "FAIL", Seconds(start),
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
