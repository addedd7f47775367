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

#ifndef IPWDM_SCENARIO_H_
#define IPWDM_SCENARIO_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipwdm/cost.h"
#include "ipwdm/metrics.h"
#include "ipwdm/netmodel.h"
#include "ipwdm/solve.h"

namespace ipwdm {

// Raised for malformed configuration; the CLI maps it to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Encoded cell name, e.g. "10G-DFN-6T", "10G+100G-DWG-3T-x2-TC":
//   <speeds joined by '+'>-<matrix label>-<volume>[-x<scale>][-TC]
// Volume renders as <n>T when a whole number of Tbps, otherwise <n>G, and
// "raw" for an unscaled matrix. TC marks the transparent-core architecture.
struct ScenarioName {
  std::vector<int> speeds_gbps = {10};
  std::string matrix = "M";
  int64_t volume_gbps = 0;  // 0: unscaled
  double transponder_scale = 1.0;
  Architecture architecture = Architecture::kOptimized;

  std::string Render() const;
  static ScenarioName Parse(std::string_view text);
  friend bool operator==(const ScenarioName&, const ScenarioName&) = default;
};

enum class MatrixKind { kInstance, kFile, kSynthetic };

struct MatrixSource {
  std::string label = "M";
  MatrixKind kind = MatrixKind::kInstance;
  std::string path;  // kFile: "<node-a> <node-b> <value>" lines
  MatrixMode mode = MatrixMode::kDecentralized;
  std::string hub;
  double hub_factor = 1.0;
  // Per-PoP gravity weights; unlisted PoPs weigh 1.
  std::map<std::string, double> weights;
};

enum class SolverChoice { kExact, kHeuristic, kExportOnly };

std::string_view SolverChoiceName(SolverChoice s);
SolverChoice ParseSolverChoice(std::string_view text);

// JSON configuration:
// {
//   "instance": "germany50.txt",             path, relative to the config
//   "pops": ["A", "B"],                       optional
//   "drop_foreign_demands": false,
//   "params": {"channels": 40, "max_path_km": 750, "max_paths": 50},
//   "matrices": [{"label": "DFN", "source": "synthetic",
//                 "mode": "centralized", "hub": "A", "hub_factor": 4,
//                 "weights": {"A": 2.5}},
//                {"label": "SND", "source": "instance"},
//                {"label": "F", "source": "file", "path": "m.txt"}],
//   "volumes_gbps": [3000, 6000],             empty: use matrices unscaled
//   "speeds": [[10], [100], [10, 100]],
//   "architectures": ["optimized", "transparent"],
//   "transponder_scales": [1, 2, 5],
//   "solver": "heuristic" | "exact" | "export",
//   "seeds": [1],
//   "limits": {"max_nodes": 10000000, "time_limit_seconds": 60,
//              "max_improve_rounds": 50},
//   "output": "out"
// }
struct ScenarioConfig {
  std::string instance_path;
  std::vector<std::string> pops;
  bool drop_foreign_demands = false;
  std::optional<int> channels;
  std::optional<double> max_path_km;
  std::optional<int> max_paths;
  std::vector<MatrixSource> matrices = {MatrixSource{}};
  std::vector<int64_t> volumes_gbps;
  std::vector<std::vector<int>> speeds = {{10}};
  std::vector<Architecture> architectures = {Architecture::kOptimized};
  std::vector<double> transponder_scales = {1.0};
  SolverChoice solver = SolverChoice::kHeuristic;
  std::vector<uint64_t> seeds = {1};
  SolveLimits limits;
  std::string output_dir = "out";
};

// Throws ConfigError. Relative paths resolve against base_dir.
ScenarioConfig ParseScenarioConfig(std::string_view json_text, const std::string& base_dir);
ScenarioConfig LoadScenarioConfig(const std::string& path);

struct CellResult {
  ScenarioName name;
  // optimal | feasible | infeasible | unknown | exported | error
  std::string status;
  std::optional<TransitReport> report;
  Cost objective = Cost::Infinite();
  Cost bound;
  int num_paths = 0;
  SolveStats stats;
  std::string error;

  bool failed() const { return status == "error"; }
  bool solved() const { return report.has_value(); }
};

struct RunResult {
  std::vector<CellResult> cells;
  // 0 all cells ran, 1 some cell failed.
  int exit_code = 0;
};

// Runs every cell of the cross product matrices x volumes x speeds x
// architectures x scales. With write_files, creates <output>/cells/<name>.json,
// <output>/summary.csv, <output>/comparison.txt and <output>/matrices.csv
// (per-PoP demand range of every matrix and volume), plus
// <output>/models/<name>.lp for the export-only solver. Outputs are
// identical across reruns.
RunResult RunScenarios(const ScenarioConfig& config, int jobs = 1, bool write_files = true);

// Transparent vs optimized table per (speeds, matrix, volume, scale) column
// with core/edge/total rows and a Difference row.
std::string RenderComparison(const std::vector<CellResult>& cells);

// Optimized cells only; reruns over the configured transponder scales and
// writes <output>/sweep.txt and <output>/sweep.csv.
RunResult SweepTransponder(ScenarioConfig config, int jobs = 1, bool write_files = true);
std::string RenderSweep(const std::vector<CellResult>& cells);

void WriteSummaryCsv(const std::vector<CellResult>& cells, std::ostream& out);

}  // namespace ipwdm

#endif  // IPWDM_SCENARIO_H_
