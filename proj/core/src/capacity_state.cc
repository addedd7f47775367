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

#include "capacity_state.h"

namespace ipwdm::internal {

CapacityState::CapacityState(const Model& model) : model_(&model) {
  const auto nodes = model.node_blocks();
  const int n = static_cast<int>(nodes.size());
  const auto edges = model.edge_blocks();
  slot_of_var_.assign(model.num_variables(), -1);
  pair_slots_.resize(model.pair_blocks().size());
  for (int b = 0; b < static_cast<int>(model.pair_blocks().size()); ++b) {
    for (int v : model.pair_blocks()[b].lightpath_vars) {
      const Variable& var = model.variable(v);
      LightpathSlot s;
      s.var = v;
      s.pair_block = b;
      s.lambda_type = var.lambda_type;
      s.from = var.from;
      s.to = var.to;
      slot_of_var_[v] = num_slots();
      pair_slots_[b].push_back(num_slots());
      slots_.push_back(s);
    }
  }
  for (const EdgeBlock& eb : edges) {
    for (const Term& t : model.row(eb.capacity_row).terms) {
      const int s = slot_of_var_[t.var];
      if (s >= 0) slots_[s].edges.push_back(eb.edge);
    }
  }
  edge_nodes_.resize(edges.size());
  for (const NodeBlock& nb : nodes) {
    if (nb.fiber_row < 0) continue;
    for (const Term& t : model.row(nb.fiber_row).terms) {
      const Variable& var = model.variable(t.var);
      if (var.kind == VarKind::kFiber) edge_nodes_[var.edge].push_back(nb.node);
    }
  }
  for (const EdgeBlock& eb : edges) fiber_unit_.push_back(model.variable(eb.fiber_var).cost);

  base_switching_.assign(n, 0);
  for (const Demand& d : model.demands()) {
    base_switching_[d.source] += d.gbps;
    base_switching_[d.target] += d.gbps;
  }
  Reset();
}

void CapacityState::Reset() {
  const int n = static_cast<int>(model_->node_blocks().size());
  count_.assign(slots_.size(), 0);
  pair_capacity_.assign(pair_slots_.size(), 0);
  edge_load_.assign(edge_nodes_.size(), 0);
  fibers_.assign(edge_nodes_.size(), 0);
  switching_ = base_switching_;
  slot14_.assign(n, 0);
  add_drop_.assign(n, 0);
  degree_.assign(n, 0);
  vmod_.assign(n, -1);
  pmod_.assign(n, -1);
  vmod_cost_.assign(n, Cost::Zero());
  pmod_cost_.assign(n, Cost::Zero());
  lambda_micros_ = fiber_micros_ = module_micros_ = 0;
  overloaded_ = 0;
  for (NodeIndex i = 0; i < n; ++i) {
    RefreshVirtual(i);
    RefreshPhysical(i);
  }
}

void CapacityState::Add(int s, int delta) {
  if (delta == 0) return;
  if (count_[s] + delta < 0) throw Error("negative light-path count");
  const LightpathSlot& slot = slots_[s];
  const LambdaType& type = model_->lambda_types()[slot.lambda_type];
  count_[s] += delta;
  pair_capacity_[slot.pair_block] += static_cast<int64_t>(delta) * type.routing_gbps;
  lambda_micros_ += model_->variable(slot.var).cost.micros() * delta;
  for (EdgeIndex e : slot.edges) {
    edge_load_[e] += delta;
    RefreshEdge(e);
  }
  for (NodeIndex end : {slot.from, slot.to}) {
    switching_[end] += static_cast<int64_t>(delta) * type.switching_gbps;
    slot14_[end] += static_cast<int64_t>(delta) * type.slot_share_fourteenths;
    add_drop_[end] += delta;
    RefreshVirtual(end);
    RefreshPhysical(end);
  }
}

void CapacityState::RefreshEdge(EdgeIndex e) {
  const int b = model_->channels_per_fiber();
  const int want = static_cast<int>((edge_load_[e] + b - 1) / b);
  const int diff = want - fibers_[e];
  if (diff == 0) return;
  fibers_[e] = want;
  fiber_micros_ += fiber_unit_[e].micros() * diff;
  for (NodeIndex n : edge_nodes_[e]) {
    degree_[n] += diff;
    RefreshPhysical(n);
  }
}

void CapacityState::SetNodeCost(std::vector<int>& choice, std::vector<Cost>& costs, NodeIndex n,
                                int pick, Cost c) {
  if (choice[n] == kOverloaded) --overloaded_;
  if (pick == kOverloaded) ++overloaded_;
  module_micros_ += c.micros() - costs[n].micros();
  choice[n] = pick;
  costs[n] = c;
}

void CapacityState::RefreshVirtual(NodeIndex n) {
  const NodeBlock& nb = model_->node_blocks()[n];
  if (!nb.pop) return;
  int pick = -1;
  Cost best = Cost::Zero();
  if (switching_[n] > 0 || slot14_[n] > 0) {
    pick = kOverloaded;
    const auto modules = model_->virtual_modules();
    for (int k = 0; k < static_cast<int>(modules.size()); ++k) {
      if (modules[k].capacity_gbps < switching_[n] ||
          static_cast<int64_t>(kSlotFraction) * modules[k].slots < slot14_[n]) {
        continue;
      }
      const Cost c = model_->variable(nb.virtual_module_vars[k]).cost;
      if (pick == kOverloaded || c < best) {
        pick = k;
        best = c;
      }
    }
    if (pick == kOverloaded) best = Cost::Zero();
  }
  SetNodeCost(vmod_, vmod_cost_, n, pick, best);
}

void CapacityState::RefreshPhysical(NodeIndex n) {
  const NodeBlock& nb = model_->node_blocks()[n];
  int pick = -1;
  Cost best = Cost::Zero();
  if (degree_[n] > 0 || add_drop_[n] > 0) {
    pick = kOverloaded;
    const auto modules = model_->physical_modules();
    for (int k = 0; k < static_cast<int>(modules.size()); ++k) {
      if (modules[k].fibers < degree_[n] || modules[k].add_drop_ports < add_drop_[n]) continue;
      const Cost c = model_->variable(nb.physical_module_vars[k]).cost;
      if (pick == kOverloaded || c < best) {
        pick = k;
        best = c;
      }
    }
    if (pick == kOverloaded) best = Cost::Zero();
  }
  SetNodeCost(pmod_, pmod_cost_, n, pick, best);
}

Cost CapacityState::cost() const {
  if (overloaded_ > 0) return Cost::Infinite();
  return Cost::FromMicros(lambda_micros_ + fiber_micros_ + module_micros_);
}

void CapacityState::Fill(Solution& solution) const {
  if (static_cast<int>(solution.values.size()) != model_->num_variables()) {
    solution.values.assign(model_->num_variables(), 0.0);
  }
  for (int s = 0; s < num_slots(); ++s) solution.values[slots_[s].var] = count_[s];
  for (const EdgeBlock& eb : model_->edge_blocks()) {
    solution.values[eb.fiber_var] = fibers_[eb.edge];
  }
  for (const NodeBlock& nb : model_->node_blocks()) {
    for (size_t k = 0; k < nb.virtual_module_vars.size(); ++k) {
      solution.values[nb.virtual_module_vars[k]] = vmod_[nb.node] == static_cast<int>(k) ? 1 : 0;
    }
    for (size_t k = 0; k < nb.physical_module_vars.size(); ++k) {
      solution.values[nb.physical_module_vars[k]] = pmod_[nb.node] == static_cast<int>(k) ? 1 : 0;
    }
  }
}

}  // namespace ipwdm::internal
