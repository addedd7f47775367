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

#include "flow_lp.h"

#include <cmath>

namespace ipwdm::internal {
namespace {

constexpr double kTolerance = 1e-7;

}  // namespace

FlowLp::FlowLp(const Model& model) : model_(&model) {
  var_column_.assign(model.num_variables(), -1);
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    if (var.kind != VarKind::kFlow || var.fixed()) continue;
    var_column_[v] = static_cast<int>(column_var_.size());
    column_var_.push_back(v);
  }
  const int n = static_cast<int>(column_var_.size());
  base_.num_cols = n;
  base_.objective.assign(n, 1.0);
  for (const Row& row : model.rows()) {
    if (row.kind != RowKind::kFlowConservation) continue;
    std::vector<double> coefs(n, 0.0);
    double rhs = row.rhs;
    bool any = false;
    for (const Term& t : row.terms) {
      const int c = var_column_[t.var];
      if (c >= 0) {
        coefs[c] += t.coef;
        any = true;
      } else {
        rhs -= t.coef * model.variable(t.var).lower;
      }
    }
    if (!any) {
      if (std::abs(rhs) > kTolerance) trivially_infeasible_ = true;
      continue;
    }
    base_.AddRow(std::move(coefs), true, rhs);
  }
  for (const PairBlock& b : model.pair_blocks()) {
    std::vector<double> coefs(n, 0.0);
    double fixed = 0;
    for (int v : b.flow_vars) {
      const int c = var_column_[v];
      if (c >= 0) {
        coefs[c] = 1.0;
      } else {
        fixed += model.variable(v).lower;
      }
    }
    fixed_load_.push_back(fixed);
    capacity_row_.push_back(static_cast<int>(base_.rows.size()));
    base_.AddRow(std::move(coefs), false, 0.0);
  }
}

std::optional<std::vector<double>> FlowLp::Solve(std::span<const double> capacities) const {
  if (trivially_infeasible_) return std::nullopt;
  for (size_t b = 0; b < capacity_row_.size(); ++b) {
    if (fixed_load_[b] > capacities[b] + kTolerance) return std::nullopt;
  }
  if (column_var_.empty()) return std::vector<double>{};
  DenseLp lp = base_;
  for (size_t b = 0; b < capacity_row_.size(); ++b) {
    lp.rhs[capacity_row_[b]] = capacities[b] - fixed_load_[b];
  }
  LpResult r = SolveDenseLp(lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  for (double& x : r.x) {
    if (std::abs(x - std::round(x)) < 1e-9) x = std::round(x);
  }
  return r.x;
}

void FlowLp::Fill(const std::vector<double>& columns, Solution& solution) const {
  for (int v = 0; v < model_->num_variables(); ++v) {
    const Variable& var = model_->variable(v);
    if (var.kind != VarKind::kFlow) continue;
    const int c = var_column_[v];
    solution.values[v] = c >= 0 ? columns.at(c) : var.lower;
  }
}

}  // namespace ipwdm::internal
