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

#ifndef IPWDM_MILP_H_
#define IPWDM_MILP_H_

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ipwdm/cost.h"
#include "ipwdm/costcat.h"
#include "ipwdm/netmodel.h"
#include "ipwdm/pathgen.h"

namespace ipwdm {

enum class VarKind { kFlow, kLightpath, kFiber, kVirtualModule, kPhysicalModule };

// Constraint families of the two-layer model.
enum class RowKind {
  kFlowConservation,
  kVirtualLinkCapacity,
  kPhysicalLinkCapacity,
  kModuleUniqueness,
  kVirtualNodeCapacity,
  kSlot,
  kFiber,
  kAddDrop,
};

std::string_view RowKindName(RowKind kind);
// Short formula for a row family, used in violation messages.
std::string_view RowFormula(RowKind kind);

enum class Sense { kLessEqual, kEqual };

struct Variable {
  VarKind kind = VarKind::kFlow;
  std::string name;
  double lower = 0;
  double upper = std::numeric_limits<double>::infinity();
  bool integer = false;
  bool binary = false;
  Cost cost;

  // Structural references; which ones are set depends on kind.
  NodeIndex source = kNoNode;  // flow: aggregated source node
  NodeIndex from = kNoNode;    // flow: tail of the virtual arc
  NodeIndex to = kNoNode;      // flow: head of the virtual arc
  PathIndex path = -1;         // lightpath
  int lambda_type = -1;        // lightpath: index into Model::lambda_types()
  EdgeIndex edge = -1;         // fiber
  NodeIndex node = kNoNode;    // modules
  int module = -1;             // modules: index into the module list

  bool fixed() const { return lower == upper; }
};

struct Term {
  int var = -1;
  double coef = 0;
};

struct Row {
  RowKind kind = RowKind::kFlowConservation;
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0;
};

// Variables and rows grouped by the network element they model.
struct PairBlock {
  int pair_id = -1;
  NodeIndex i = kNoNode;
  NodeIndex j = kNoNode;
  std::vector<int> lightpath_vars;
  std::vector<int> flow_vars;
  int capacity_row = -1;
};

struct EdgeBlock {
  EdgeIndex edge = -1;
  int fiber_var = -1;
  int capacity_row = -1;
};

struct NodeBlock {
  NodeIndex node = kNoNode;
  bool pop = false;
  std::vector<int> virtual_module_vars;
  std::vector<int> physical_module_vars;
  int virtual_unique_row = -1;
  int physical_unique_row = -1;
  int node_capacity_row = -1;
  int slot_row = -1;
  int fiber_row = -1;
  int add_drop_row = -1;
};

// Mixed-integer program for one instance. Flow variables are aggregated by
// demand source: f(s, i, j) is the flow of all demands leaving s on the
// virtual arc i -> j. The slot rows are stored multiplied by kSlotFraction so
// every coefficient is integral.
class Model {
 public:
  Architecture architecture() const { return architecture_; }
  std::span<const Variable> variables() const { return variables_; }
  const Variable& variable(int v) const { return variables_.at(v); }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  std::span<const Row> rows() const { return rows_; }
  const Row& row(int r) const { return rows_.at(r); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int RowCount(RowKind kind) const;

  std::span<const LambdaType> lambda_types() const { return lambda_types_; }
  std::span<const VirtualNodeModule> virtual_modules() const { return virtual_modules_; }
  std::span<const PhysicalNodeModule> physical_modules() const { return physical_modules_; }
  std::span<const NodeIndex> sources() const { return sources_; }
  std::span<const PairBlock> pair_blocks() const { return pair_blocks_; }
  std::span<const EdgeBlock> edge_blocks() const { return edge_blocks_; }
  std::span<const NodeBlock> node_blocks() const { return node_blocks_; }
  std::span<const Demand> demands() const { return demands_; }
  int channels_per_fiber() const { return channels_per_fiber_; }
  int catalog_size() const { return catalog_size_; }

  // -1 when absent.
  int FlowVar(NodeIndex source, NodeIndex from, NodeIndex to) const;
  int LightpathVar(PathIndex path, int lambda_type) const;
  int FindVariable(std::string_view name) const;

 private:
  friend class ModelBuilder;

  int AddVariable(Variable v);
  int AddRow(Row r);

  Architecture architecture_ = Architecture::kOptimized;
  std::vector<Variable> variables_;
  std::vector<Row> rows_;
  std::vector<LambdaType> lambda_types_;
  std::vector<VirtualNodeModule> virtual_modules_;
  std::vector<PhysicalNodeModule> physical_modules_;
  std::vector<NodeIndex> sources_;
  std::vector<PairBlock> pair_blocks_;
  std::vector<EdgeBlock> edge_blocks_;
  std::vector<NodeBlock> node_blocks_;
  std::vector<Demand> demands_;
  int channels_per_fiber_ = 40;
  int catalog_size_ = 0;
  std::unordered_map<std::string, int> var_by_name_;
  std::unordered_map<int64_t, int> flow_index_;
  std::unordered_map<int64_t, int> lightpath_index_;
  int num_nodes_ = 0;
};

// The optimized (hybrid IP-over-WDM) model. Throws when a positive demand
// cannot be connected through pairs that have at least one admissible path.
Model BuildModel(const Instance& instance, const PathCatalog& catalog,
                 const CostCatalog& costs);

// Transparent-core variant: routers cost nothing, each pair keeps only its
// shortest path, and every demand is fixed to its direct virtual hop.
// Throws "transparent infeasible: unreachable pair ..." when a demand pair has
// no admissible path.
Model BuildTransparentVariant(const Instance& instance, const PathCatalog& catalog,
                              const CostCatalog& costs);

// Builds whichever model the instance's architecture asks for.
Model BuildModelFor(const Instance& instance, const PathCatalog& catalog,
                    const CostCatalog& costs);

// Values for every model variable, indexed like Model::variables().
struct Solution {
  std::vector<double> values;
};

Solution ZeroSolution(const Model& model);

// Objective value of a solution. With final_cost the per-slot line-card
// charge for slots carrying 10G light paths (3 units per occupied slot at
// each router) is added. Throws on a missing (NaN) value.
Cost EvaluateCost(const Model& model, const Solution& solution, bool final_cost = false);

// Only the per-slot 10G post-processing charge.
Cost TenGigSlotCharge(const Model& model, const Solution& solution);

// CPLEX LP text export. Variable names:
//   f_s<source>_<from>_<to>   aggregated flow (node indexes)
//   y_p<path>_<speed>G        light paths on a catalog path
//   y_e<edge>                 fibers on an edge
//   x_n<node>_m<module>       router module at a PoP
//   x_o<node>_m<module>       cross-connect module at a node
// Slot rows appear multiplied by 14. Output is deterministic.
void WriteLp(const Model& model, std::ostream& out);
void ExportModel(const Model& model, const std::string& path);

struct ImportedSolution {
  Solution solution;
  // Objective reported by the solver, when the file carries one.
  std::optional<double> objective;
  std::vector<std::string> missing;
};

// Reads "<name> <value>" lines (with an optional "# Objective value = X"
// header) or a CPLEX-style XML solution. Unlisted variables are NaN and named
// in `missing`; unknown names throw.
ImportedSolution ImportSolution(const Model& model, std::istream& in);
ImportedSolution ImportSolutionFile(const Model& model, const std::string& path);

// Writes a solution in the "<name> <value>" format.
void WriteSolution(const Model& model, const Solution& solution, std::ostream& out,
                   std::optional<double> objective = std::nullopt);

}  // namespace ipwdm

#endif  // IPWDM_MILP_H_
