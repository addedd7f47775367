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

#ifndef IPWDM_SRC_FLOW_LP_H_
#define IPWDM_SRC_FLOW_LP_H_

#include <optional>
#include <span>
#include <vector>

#include "ipwdm/milp.h"
#include "simplex.h"

namespace ipwdm::internal {

// Flow-conservation and virtual-capacity rows of a model as an LP over the
// free flow variables, for given pair capacities. Fixed flows are moved to
// the right-hand side.
class FlowLp {
 public:
  explicit FlowLp(const Model& model);

  // Sum of fixed flow values on a pair block.
  double fixed_load(int pair_block) const { return fixed_load_[pair_block]; }

  // Minimum-total-flow routing within the capacities (one per pair block), or
  // nullopt when none exists. Result is indexed by free column.
  std::optional<std::vector<double>> Solve(std::span<const double> capacities) const;

  // Copies a Solve() result and the fixed flows into `solution`.
  void Fill(const std::vector<double>& columns, Solution& solution) const;

 private:
  const Model* model_;
  std::vector<int> column_var_;
  std::vector<int> var_column_;
  DenseLp base_;
  std::vector<int> capacity_row_;
  std::vector<double> fixed_load_;
  bool trivially_infeasible_ = false;
};

}  // namespace ipwdm::internal

#endif  // IPWDM_SRC_FLOW_LP_H_
