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

// Command line front end: scenario runs, sweeps and single-instance tools.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ipwdm/costcat.h"
#include "ipwdm/instance_io.h"
#include "ipwdm/metrics.h"
#include "ipwdm/milp.h"
#include "ipwdm/pathgen.h"
#include "ipwdm/scenario.h"
#include "ipwdm/solve.h"

namespace {

using namespace ipwdm;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct InstanceFlags {
  std::string path;
  std::vector<std::string> pops;
  bool drop_foreign = false;
  std::vector<int> speeds;
  std::string architecture;
  std::optional<int> channels;
  std::optional<double> max_km;
  std::optional<int> max_paths;
  std::optional<double> scale;

  void Register(CLI::App* app) {
    app->add_option("--instance", path, "Instance file (text format or SNDlib native)")
        ->required()
        ->check(CLI::ExistingFile);
    app->add_option("--pops", pops, "PoP names (default: demand endpoints)")->delimiter(',');
    app->add_flag("--drop-foreign-demands", drop_foreign,
                  "Drop SNDlib demands that touch a non-PoP");
    app->add_option("--speeds", speeds, "Circuit speeds in Gbps, e.g. 10,100")->delimiter(',');
    app->add_option("--architecture", architecture, "optimized | transparent");
    app->add_option("--channels", channels, "Channels per fiber");
    app->add_option("--max-km", max_km, "Maximum light-path length");
    app->add_option("--max-paths", max_paths, "Paths per PoP pair");
    app->add_option("--transponder-scale", scale, "Transponder cost multiplier");
  }

  Instance Load() const {
    LoadOptions opts;
    opts.pops = pops;
    opts.drop_foreign_demands = drop_foreign;
    Instance inst = LoadInstanceFile(path, opts);
    ScenarioParams p = inst.params();
    if (!speeds.empty()) p.speeds_gbps = speeds;
    if (!architecture.empty()) p.architecture = ParseArchitecture(architecture);
    if (channels) p.channels_per_fiber = *channels;
    if (max_km) p.max_path_km = *max_km;
    if (max_paths) p.max_paths_per_pair = *max_paths;
    if (scale) p.transponder_scale = *scale;
    return inst.WithParams(p);
  }
};

struct Built {
  Instance instance;
  PathCatalog catalog;
  CostCatalog costs;
  Model model;
};

Built BuildAll(const InstanceFlags& flags) {
  Instance inst = flags.Load();
  PathCatalog catalog = PathCatalog::Build(inst);
  CostCatalog costs = CostCatalog::Build(inst);
  Model model = BuildModelFor(inst, catalog, costs);
  return {std::move(inst), std::move(catalog), std::move(costs), std::move(model)};
}

std::ostream& OpenOut(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw Error("cannot write " + path);
  return file;
}

struct ScenarioFlags {
  std::string config;
  std::string instance;
  std::string out;
  std::string solver;
  std::optional<uint64_t> seed;
  int jobs = 1;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "Scenario configuration (JSON)")->check(CLI::ExistingFile);
    app->add_option("--instance", instance, "Instance file; overrides the config");
    app->add_option("--out", out, "Output directory; overrides the config");
    app->add_option("--solver", solver, "exact | heuristic | export");
    app->add_option("--seed", seed, "Single seed; overrides the config");
    app->add_option("--jobs", jobs, "Concurrent scenario cells")->check(CLI::PositiveNumber);
  }

  ScenarioConfig Resolve() const {
    ScenarioConfig c;
    if (!config.empty()) c = LoadScenarioConfig(config);
    if (!instance.empty()) c.instance_path = instance;
    if (!out.empty()) c.output_dir = out;
    if (!solver.empty()) c.solver = ParseSolverChoice(solver);
    if (seed) c.seeds = {*seed};
    if (c.instance_path.empty()) throw ConfigError("either --config or --instance is required");
    return c;
  }
};

int RunCommand(const ScenarioFlags& flags, bool sweep) {
  const ScenarioConfig config = flags.Resolve();
  const RunResult r = sweep ? SweepTransponder(config, flags.jobs) : RunScenarios(config, flags.jobs);
  std::cout << (sweep ? RenderSweep(r.cells) : RenderComparison(r.cells));
  for (const CellResult& c : r.cells) {
    if (c.failed()) std::cerr << c.name.Render() << ": " << c.error << "\n";
  }
  std::cerr << r.cells.size() << " cells written to " << config.output_dir << "\n";
  return r.exit_code;
}

void PrintViolations(const std::vector<Violation>& v) {
  for (const Violation& x : v) std::cout << "violation: " << x.description << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IP-over-WDM network design: model building, solving and scenario runs"};
  app.require_subcommand(1);

  ScenarioFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run every scenario cell of a configuration");
  run_flags.Register(run);

  ScenarioFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "Transponder cost sweep (optimized architecture)");
  sweep_flags.Register(sweep);

  InstanceFlags catalog_flags;
  std::string catalog_out;
  CLI::App* catalog = app.add_subcommand("catalog", "Print the equipment cost catalog as CSV");
  catalog_flags.Register(catalog);
  catalog->add_option("--out", catalog_out, "Output file (default stdout)");

  InstanceFlags paths_flags;
  std::string paths_out;
  CLI::App* paths = app.add_subcommand("paths", "Build the admissible light-path catalog");
  paths_flags.Register(paths);
  paths->add_option("--out", paths_out, "Write the catalog dump here");

  InstanceFlags export_flags;
  std::string export_out;
  CLI::App* exp = app.add_subcommand("export", "Write the model in CPLEX LP format");
  export_flags.Register(exp);
  exp->add_option("--out", export_out, "LP file")->required();

  InstanceFlags solve_flags;
  std::string solve_solver = "heuristic";
  uint64_t solve_seed = 1;
  std::string solve_out, solve_report;
  int64_t solve_max_nodes = 10'000'000;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve_flags.Register(solve);
  solve->add_option("--solver", solve_solver, "exact | heuristic");
  solve->add_option("--seed", solve_seed, "Heuristic tie-breaking seed");
  solve->add_option("--out", solve_out, "Write the solution (name value lines)");
  solve->add_option("--report", solve_report, "Write the transit report (JSON)");
  solve->add_option("--max-nodes", solve_max_nodes, "Exact search node limit");

  InstanceFlags eval_flags;
  std::string eval_solution;
  CLI::App* eval = app.add_subcommand("evaluate", "Price an imported solution");
  eval_flags.Register(eval);
  eval->add_option("--solution", eval_solution, "Solution file")->required()->check(CLI::ExistingFile);

  InstanceFlags validate_flags;
  std::string validate_solution;
  CLI::App* validate = app.add_subcommand("validate", "Check a solution against every model row");
  validate_flags.Register(validate);
  validate->add_option("--solution", validate_solution, "Solution file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return RunCommand(run_flags, false);
    if (*sweep) return RunCommand(sweep_flags, true);
    if (*catalog) {
      const Instance inst = catalog_flags.Load();
      std::ofstream file;
      CostCatalog::Build(inst).WriteCsv(inst.graph(), OpenOut(catalog_out, file));
      return kExitOk;
    }
    if (*paths) {
      const Instance inst = paths_flags.Load();
      const PathCatalog c = PathCatalog::Build(inst);
      if (!paths_out.empty()) {
        std::ofstream file;
        c.Write(inst.graph(), OpenOut(paths_out, file));
      }
      std::cout << "|P| = " << c.num_paths() << " over " << c.num_pairs() << " PoP pairs\n";
      for (int q : c.EmptyPairs()) {
        std::cout << "no admissible path: " << inst.graph().node(c.pairs()[q].first).name << " - "
                  << inst.graph().node(c.pairs()[q].second).name << "\n";
      }
      return kExitOk;
    }
    if (*exp) {
      const Built b = BuildAll(export_flags);
      ExportModel(b.model, export_out);
      std::cout << b.model.num_variables() << " variables, " << b.model.num_rows() << " rows\n";
      return kExitOk;
    }
    if (*solve) {
      const Built b = BuildAll(solve_flags);
      SolveLimits limits;
      limits.max_nodes = solve_max_nodes;
      SolveReport r;
      if (solve_solver == "heuristic") {
        r = SolveHeuristic(b.model, solve_seed, limits);
      } else if (solve_solver == "exact") {
        SolveReport h = SolveHeuristic(b.model, solve_seed, limits);
        r = SolveExact(b.model, limits, h.best);
      } else {
        throw ConfigError("unknown solver '" + solve_solver + "'");
      }
      std::cout << "status " << SolveStatusName(r.status) << "\n";
      if (!r.best) return r.status == SolveStatus::kInfeasible ? kExitOk : kExitFailure;
      std::cout << "objective " << r.objective.ToString() << "\n"
                << "final " << EvaluateCost(b.model, *r.best, true).ToString() << "\n"
                << "bound " << r.bound.ToString() << "\n";
      if (!solve_out.empty()) {
        std::ofstream file;
        WriteSolution(b.model, *r.best, OpenOut(solve_out, file), r.objective.units());
      }
      if (!solve_report.empty()) {
        std::ofstream file;
        WriteReportJson(BuildReport(b.instance, b.catalog, b.model, *r.best),
                        OpenOut(solve_report, file));
      }
      return kExitOk;
    }
    if (*eval || *validate) {
      const InstanceFlags& flags = *eval ? eval_flags : validate_flags;
      const Built b = BuildAll(flags);
      const ImportedSolution s = ImportSolutionFile(b.model, *eval ? eval_solution : validate_solution);
      if (!s.missing.empty()) {
        std::cerr << s.missing.size() << " variables missing, first: " << s.missing.front() << "\n";
        return kExitFailure;
      }
      const auto violations = CheckFeasibility(b.model, s.solution);
      PrintViolations(violations);
      if (*eval) {
        std::cout << "objective " << EvaluateCost(b.model, s.solution).ToString() << "\n"
                  << "final " << EvaluateCost(b.model, s.solution, true).ToString() << "\n";
        if (s.objective) std::printf("reported %.9g\n", *s.objective);
      } else {
        std::cout << (violations.empty() ? "feasible" : "infeasible") << "\n";
      }
      return violations.empty() ? kExitOk : kExitFailure;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
