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

#include "ipwdm/milp.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ipwdm {
namespace {

constexpr int64_t kSlotChargeMicros = 3 * Cost::kMicrosPerUnit;

int64_t FlowKey(int num_nodes, NodeIndex s, NodeIndex i, NodeIndex j) {
  return (static_cast<int64_t>(s) * num_nodes + i) * num_nodes + j;
}

int64_t LightpathKey(PathIndex p, int t) { return static_cast<int64_t>(p) * 8 + t; }

std::string N(int v) { return std::to_string(v); }

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string_view RowKindName(RowKind kind) {
  switch (kind) {
    case RowKind::kFlowConservation: return "flow conservation";
    case RowKind::kVirtualLinkCapacity: return "virtual link capacity";
    case RowKind::kPhysicalLinkCapacity: return "physical link capacity";
    case RowKind::kModuleUniqueness: return "module uniqueness";
    case RowKind::kVirtualNodeCapacity: return "virtual node capacity";
    case RowKind::kSlot: return "router slots";
    case RowKind::kFiber: return "node fiber degree";
    case RowKind::kAddDrop: return "add-drop ports";
  }
  return "?";
}

std::string_view RowFormula(RowKind kind) {
  switch (kind) {
    case RowKind::kFlowConservation:
      return "sum_j f^s_ij - sum_j f^s_ji = outflow of s at s, -d(s,i) elsewhere";
    case RowKind::kVirtualLinkCapacity:
      return "sum_s (f^s_ij + f^s_ji) <= sum_{p in P_ij} sum_l A_l y_p^l";
    case RowKind::kPhysicalLinkCapacity:
      return "sum_{p: e in p} sum_l y_p^l <= B y_e";
    case RowKind::kModuleUniqueness:
      return "sum_n x_i^n <= 1";
    case RowKind::kVirtualNodeCapacity:
      return "d(i) + sum_{p in delta_P(i)} sum_l A'_l y_p^l <= sum_n C^n x_i^n";
    case RowKind::kSlot:
      return "sum_{p in delta_P(i)} sum_l s_l y_p^l <= sum_n S^n x_i^n";
    case RowKind::kFiber:
      return "sum_{e in delta_E(i)} y_e <= sum_o F^o x_i^o";
    case RowKind::kAddDrop:
      return "sum_{p in delta_P(i)} sum_l y_p^l <= sum_o P^o x_i^o";
  }
  return "?";
}

int Model::RowCount(RowKind kind) const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [&](const Row& r) { return r.kind == kind; }));
}

int Model::FlowVar(NodeIndex source, NodeIndex from, NodeIndex to) const {
  if (source < 0 || from < 0 || to < 0 || source >= num_nodes_ || from >= num_nodes_ ||
      to >= num_nodes_) {
    return -1;
  }
  auto it = flow_index_.find(FlowKey(num_nodes_, source, from, to));
  return it == flow_index_.end() ? -1 : it->second;
}

int Model::LightpathVar(PathIndex path, int lambda_type) const {
  auto it = lightpath_index_.find(LightpathKey(path, lambda_type));
  return it == lightpath_index_.end() ? -1 : it->second;
}

int Model::FindVariable(std::string_view name) const {
  auto it = var_by_name_.find(std::string(name));
  return it == var_by_name_.end() ? -1 : it->second;
}

int Model::AddVariable(Variable v) {
  const int id = num_variables();
  if (!var_by_name_.emplace(v.name, id).second) throw Error("duplicate variable " + v.name);
  variables_.push_back(std::move(v));
  return id;
}

int Model::AddRow(Row r) {
  rows_.push_back(std::move(r));
  return num_rows() - 1;
}

class ModelBuilder {
 public:
  ModelBuilder(const Instance& instance, const PathCatalog& catalog, const CostCatalog& costs,
               Architecture arch)
      : instance_(instance), catalog_(catalog), costs_(costs), arch_(arch) {}

  Model Build() {
    const PhysicalGraph& graph = instance_.graph();
    const int n = graph.num_nodes();
    m_.architecture_ = arch_;
    m_.num_nodes_ = n;
    m_.lambda_types_.assign(costs_.lambda_types().begin(), costs_.lambda_types().end());
    m_.virtual_modules_.assign(costs_.virtual_modules().begin(), costs_.virtual_modules().end());
    m_.physical_modules_.assign(costs_.physical_modules().begin(),
                                costs_.physical_modules().end());
    m_.demands_.assign(instance_.demands().begin(), instance_.demands().end());
    m_.channels_per_fiber_ = instance_.params().channels_per_fiber;
    m_.catalog_size_ = catalog_.num_paths();
    if (static_cast<int>(costs_.fiber_costs().size()) != graph.num_edges()) {
      throw Error("cost catalog does not match the instance");
    }

    CheckReachability();
    const bool transparent = arch_ == Architecture::kTransparentCore;

    // Aggregated sources.
    std::vector<int64_t> outflow(n, 0);
    std::vector<std::vector<std::pair<NodeIndex, int64_t>>> sinks(n);
    for (const Demand& d : instance_.demands()) {
      outflow[d.source] += d.gbps;
      sinks[d.source].emplace_back(d.target, d.gbps);
    }
    for (NodeIndex s : instance_.pops()) {
      if (outflow[s] > 0) m_.sources_.push_back(s);
    }

    // Pairs with at least one route.
    std::vector<int> available;
    for (int q = 0; q < catalog_.num_pairs(); ++q) {
      if (!catalog_.PairPaths(q).empty()) available.push_back(q);
    }

    // Flow variables.
    std::vector<std::vector<int>> incident_pairs(n);
    for (int q : available) {
      auto [i, j] = catalog_.pairs()[q];
      incident_pairs[i].push_back(q);
      incident_pairs[j].push_back(q);
      PairBlock b;
      b.pair_id = q;
      b.i = i;
      b.j = j;
      m_.pair_blocks_.push_back(std::move(b));
    }
    auto demand_of = [&](NodeIndex s, NodeIndex t) -> int64_t {
      for (auto [tt, g] : sinks[s]) {
        if (tt == t) return g;
      }
      return 0;
    };
    for (NodeIndex s : m_.sources_) {
      for (PairBlock& b : m_.pair_blocks_) {
        for (auto [from, to] : {std::pair{b.i, b.j}, std::pair{b.j, b.i}}) {
          Variable v;
          v.kind = VarKind::kFlow;
          v.name = "f_s" + N(s) + "_" + N(from) + "_" + N(to);
          v.source = s;
          v.from = from;
          v.to = to;
          if (transparent) {
            const double fixed = from == s ? static_cast<double>(demand_of(s, to)) : 0.0;
            v.lower = v.upper = fixed;
          }
          const int id = m_.AddVariable(std::move(v));
          m_.flow_index_[FlowKey(n, s, from, to)] = id;
          b.flow_vars.push_back(id);
        }
      }
    }

    // Light-path variables.
    std::vector<PathIndex> model_paths;
    for (PairBlock& b : m_.pair_blocks_) {
      auto paths = catalog_.PairPaths(b.pair_id);
      const size_t keep = transparent ? 1 : paths.size();
      for (size_t k = 0; k < keep; ++k) {
        const PathIndex p = paths[k];
        model_paths.push_back(p);
        for (int t = 0; t < static_cast<int>(m_.lambda_types_.size()); ++t) {
          Variable v;
          v.kind = VarKind::kLightpath;
          v.name = "y_p" + N(p) + "_" + N(m_.lambda_types_[t].speed_gbps) + "G";
          v.integer = true;
          v.cost = m_.lambda_types_[t].cost;
          v.path = p;
          v.lambda_type = t;
          v.from = b.i;
          v.to = b.j;
          const int id = m_.AddVariable(std::move(v));
          m_.lightpath_index_[LightpathKey(p, t)] = id;
          b.lightpath_vars.push_back(id);
        }
      }
    }

    // Fibers.
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
      Variable v;
      v.kind = VarKind::kFiber;
      v.name = "y_e" + N(e);
      v.integer = true;
      v.cost = costs_.fiber_cost(e);
      v.edge = e;
      EdgeBlock b;
      b.edge = e;
      b.fiber_var = m_.AddVariable(std::move(v));
      m_.edge_blocks_.push_back(b);
    }

    // Modules.
    for (NodeIndex i = 0; i < n; ++i) {
      NodeBlock b;
      b.node = i;
      b.pop = instance_.is_pop(i);
      if (b.pop) {
        for (int k = 0; k < static_cast<int>(m_.virtual_modules_.size()); ++k) {
          Variable v;
          v.kind = VarKind::kVirtualModule;
          v.name = "x_n" + N(i) + "_m" + N(k);
          v.integer = v.binary = true;
          v.upper = 1;
          v.cost = transparent ? Cost::Zero() : m_.virtual_modules_[k].cost;
          v.node = i;
          v.module = k;
          b.virtual_module_vars.push_back(m_.AddVariable(std::move(v)));
        }
      }
      for (int k = 0; k < static_cast<int>(m_.physical_modules_.size()); ++k) {
        Variable v;
        v.kind = VarKind::kPhysicalModule;
        v.name = "x_o" + N(i) + "_m" + N(k);
        v.integer = v.binary = true;
        v.upper = 1;
        v.cost = m_.physical_modules_[k].cost;
        v.node = i;
        v.module = k;
        b.physical_module_vars.push_back(m_.AddVariable(std::move(v)));
      }
      m_.node_blocks_.push_back(std::move(b));
    }

    // Flow conservation per (source, PoP).
    for (NodeIndex s : m_.sources_) {
      for (NodeIndex i : instance_.pops()) {
        Row r;
        r.kind = RowKind::kFlowConservation;
        r.name = "flow_s" + N(s) + "_n" + N(i);
        r.sense = Sense::kEqual;
        for (int q : incident_pairs[i]) {
          auto [a, b] = catalog_.pairs()[q];
          const NodeIndex j = a == i ? b : a;
          r.terms.push_back({m_.FlowVar(s, i, j), 1.0});
          r.terms.push_back({m_.FlowVar(s, j, i), -1.0});
        }
        r.rhs = i == s ? static_cast<double>(outflow[s]) : -static_cast<double>(demand_of(s, i));
        if (r.terms.empty()) {
          if (r.rhs != 0) throw Error("demand endpoint without admissible paths");
          continue;
        }
        m_.AddRow(std::move(r));
      }
    }

    // Virtual link capacity.
    for (PairBlock& b : m_.pair_blocks_) {
      Row r;
      r.kind = RowKind::kVirtualLinkCapacity;
      r.name = "vcap_" + N(b.i) + "_" + N(b.j);
      for (int v : b.flow_vars) r.terms.push_back({v, 1.0});
      for (int v : b.lightpath_vars) {
        r.terms.push_back({v, -static_cast<double>(
                                  m_.lambda_types_[m_.variables_[v].lambda_type].routing_gbps)});
      }
      b.capacity_row = m_.AddRow(std::move(r));
    }

    // Physical link capacity.
    std::vector<std::vector<PathIndex>> model_paths_on_edge(graph.num_edges());
    std::vector<std::vector<PathIndex>> model_paths_at_node(n);
    for (PathIndex p : model_paths) {
      const PhysPath& path = catalog_.path(p);
      for (EdgeIndex e : path.edges) model_paths_on_edge[e].push_back(p);
      model_paths_at_node[path.from].push_back(p);
      model_paths_at_node[path.to].push_back(p);
    }
    auto lightpath_terms = [&](std::span<const PathIndex> paths, auto coef) {
      std::vector<Term> terms;
      for (PathIndex p : paths) {
        for (int t = 0; t < static_cast<int>(m_.lambda_types_.size()); ++t) {
          terms.push_back({m_.LightpathVar(p, t), coef(m_.lambda_types_[t])});
        }
      }
      return terms;
    };
    for (EdgeBlock& b : m_.edge_blocks_) {
      Row r;
      r.kind = RowKind::kPhysicalLinkCapacity;
      r.name = "pcap_e" + N(b.edge);
      r.terms = lightpath_terms(model_paths_on_edge[b.edge], [](const LambdaType&) { return 1.0; });
      r.terms.push_back({b.fiber_var, -static_cast<double>(m_.channels_per_fiber_)});
      b.capacity_row = m_.AddRow(std::move(r));
    }

    // Node rows.
    const std::vector<int64_t> node_demand = NodeDemand(instance_);
    for (NodeBlock& b : m_.node_blocks_) {
      const NodeIndex i = b.node;
      if (b.pop) {
        Row u;
        u.kind = RowKind::kModuleUniqueness;
        u.name = "vmod_n" + N(i);
        u.rhs = 1;
        for (int v : b.virtual_module_vars) u.terms.push_back({v, 1.0});
        b.virtual_unique_row = m_.AddRow(std::move(u));
      }
      Row uo;
      uo.kind = RowKind::kModuleUniqueness;
      uo.name = "omod_n" + N(i);
      uo.rhs = 1;
      for (int v : b.physical_module_vars) uo.terms.push_back({v, 1.0});
      b.physical_unique_row = m_.AddRow(std::move(uo));

      if (b.pop) {
        Row c;
        c.kind = RowKind::kVirtualNodeCapacity;
        c.name = "vnode_n" + N(i);
        c.terms = lightpath_terms(model_paths_at_node[i], [](const LambdaType& t) {
          return static_cast<double>(t.switching_gbps);
        });
        for (int v : b.virtual_module_vars) {
          c.terms.push_back(
              {v, -static_cast<double>(m_.virtual_modules_[m_.variables_[v].module].capacity_gbps)});
        }
        c.rhs = -static_cast<double>(node_demand[i]);
        b.node_capacity_row = m_.AddRow(std::move(c));

        Row s;
        s.kind = RowKind::kSlot;
        s.name = "slot_n" + N(i);
        s.terms = lightpath_terms(model_paths_at_node[i], [](const LambdaType& t) {
          return static_cast<double>(t.slot_share_fourteenths);
        });
        for (int v : b.virtual_module_vars) {
          s.terms.push_back(
              {v, -static_cast<double>(kSlotFraction *
                                       m_.virtual_modules_[m_.variables_[v].module].slots)});
        }
        b.slot_row = m_.AddRow(std::move(s));
      }

      Row f;
      f.kind = RowKind::kFiber;
      f.name = "fiber_n" + N(i);
      for (EdgeIndex e : graph.incident(i)) f.terms.push_back({m_.edge_blocks_[e].fiber_var, 1.0});
      for (int v : b.physical_module_vars) {
        f.terms.push_back(
            {v, -static_cast<double>(m_.physical_modules_[m_.variables_[v].module].fibers)});
      }
      b.fiber_row = m_.AddRow(std::move(f));

      Row a;
      a.kind = RowKind::kAddDrop;
      a.name = "adddrop_n" + N(i);
      a.terms = lightpath_terms(model_paths_at_node[i], [](const LambdaType&) { return 1.0; });
      for (int v : b.physical_module_vars) {
        a.terms.push_back(
            {v, -static_cast<double>(m_.physical_modules_[m_.variables_[v].module].add_drop_ports)});
      }
      b.add_drop_row = m_.AddRow(std::move(a));
    }
    return std::move(m_);
  }

 private:
  void CheckReachability() {
    const PhysicalGraph& graph = instance_.graph();
    if (catalog_.num_pairs() != static_cast<int>(instance_.pops().size() *
                                                 (instance_.pops().size() - 1) / 2)) {
      throw Error("path catalog does not match the instance");
    }
    if (arch_ == Architecture::kTransparentCore) {
      for (const Demand& d : instance_.demands()) {
        if (catalog_.PairPaths(d.source, d.target).empty()) {
          throw Error("transparent infeasible: unreachable pair " + graph.node(d.source).name +
                      "-" + graph.node(d.target).name);
        }
      }
      return;
    }
    DisjointSets sets(graph.num_nodes());
    for (int q = 0; q < catalog_.num_pairs(); ++q) {
      if (!catalog_.PairPaths(q).empty()) {
        sets.Union(catalog_.pairs()[q].first, catalog_.pairs()[q].second);
      }
    }
    for (const Demand& d : instance_.demands()) {
      if (sets.Find(d.source) != sets.Find(d.target)) {
        throw Error("no admissible path chain between " + graph.node(d.source).name + " and " +
                    graph.node(d.target).name);
      }
    }
  }

  const Instance& instance_;
  const PathCatalog& catalog_;
  const CostCatalog& costs_;
  Architecture arch_;
  Model m_;
};

Model BuildModel(const Instance& instance, const PathCatalog& catalog,
                 const CostCatalog& costs) {
  return ModelBuilder(instance, catalog, costs, Architecture::kOptimized).Build();
}

Model BuildTransparentVariant(const Instance& instance, const PathCatalog& catalog,
                              const CostCatalog& costs) {
  return ModelBuilder(instance, catalog, costs, Architecture::kTransparentCore).Build();
}

Model BuildModelFor(const Instance& instance, const PathCatalog& catalog,
                    const CostCatalog& costs) {
  return instance.params().architecture == Architecture::kTransparentCore
             ? BuildTransparentVariant(instance, catalog, costs)
             : BuildModel(instance, catalog, costs);
}

Solution ZeroSolution(const Model& model) {
  Solution s;
  s.values.reserve(model.num_variables());
  for (const Variable& v : model.variables()) s.values.push_back(v.lower);
  return s;
}

namespace {

void CheckComplete(const Model& model, const Solution& solution) {
  if (static_cast<int>(solution.values.size()) != model.num_variables()) {
    throw Error("solution has " + std::to_string(solution.values.size()) + " values, model has " +
                std::to_string(model.num_variables()) + " variables");
  }
  for (int v = 0; v < model.num_variables(); ++v) {
    if (std::isnan(solution.values[v])) {
      throw Error("missing value for variable " + model.variable(v).name);
    }
  }
}

}  // namespace

Cost TenGigSlotCharge(const Model& model, const Solution& solution) {
  CheckComplete(model, solution);
  if (model.architecture() == Architecture::kTransparentCore) return Cost::Zero();
  int ten = -1;
  for (int t = 0; t < static_cast<int>(model.lambda_types().size()); ++t) {
    if (model.lambda_types()[t].speed_gbps == 10) ten = t;
  }
  if (ten < 0) return Cost::Zero();
  std::vector<int64_t> ends(model.node_blocks().size(), 0);
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    if (var.kind != VarKind::kLightpath || var.lambda_type != ten) continue;
    const int64_t y = std::llround(solution.values[v]);
    ends[var.from] += y;
    ends[var.to] += y;
  }
  Cost total;
  for (int64_t e : ends) {
    total += Cost::FromMicros(kSlotChargeMicros) * ((e + kSlotFraction - 1) / kSlotFraction);
  }
  return total;
}

Cost EvaluateCost(const Model& model, const Solution& solution, bool final_cost) {
  CheckComplete(model, solution);
  Cost total;
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    if (var.cost == Cost::Zero()) continue;
    total += var.cost * std::llround(solution.values[v]);
  }
  if (final_cost) total += TenGigSlotCharge(model, solution);
  return total;
}

}  // namespace ipwdm
