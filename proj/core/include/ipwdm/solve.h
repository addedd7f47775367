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

#ifndef IPWDM_SOLVE_H_
#define IPWDM_SOLVE_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipwdm/cost.h"
#include "ipwdm/milp.h"
#include "ipwdm/netmodel.h"

namespace ipwdm {

enum class ViolationKind { kRow, kBound, kIntegrality };

struct Violation {
  ViolationKind kind = ViolationKind::kRow;
  // Row index for kRow, variable index otherwise.
  int index = -1;
  RowKind row_kind = RowKind::kFlowConservation;
  std::string name;
  double lhs = 0;
  double rhs = 0;
  // Human-readable, e.g. `physical link capacity "sum ... <= B y_e": pcap_e3 ...`.
  std::string description;
};

// Every violated row, bound and integrality requirement. Rows touching
// continuous variables hold within 1e-6; all-integer rows must hold exactly
// after integer variables are rounded (which must be within 1e-6).
std::vector<Violation> CheckFeasibility(const Model& model, const Solution& solution);

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kUnknown };

std::string_view SolveStatusName(SolveStatus status);

struct SolveLimits {
  int64_t max_nodes = 10'000'000;
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  int max_improve_rounds = 50;
};

struct SolveStats {
  int64_t nodes = 0;
  int64_t iterations = 0;
  double wall_seconds = 0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Solution> best;
  // Objective of best (without the per-slot post charge); Infinite when none.
  Cost objective = Cost::Infinite();
  // Valid lower bound on the optimum.
  Cost bound = Cost::Zero();
  SolveStats stats;
};

// Branch and bound over light-path counts. Fibers and node modules follow
// from the counts (cheapest sufficient choice), flows from a small LP at each
// leaf. Exceeding the node or time limit yields kUnknown with the best found.
SolveReport SolveExact(const Model& model, const SolveLimits& limits = {},
                       const std::optional<Solution>& incumbent = std::nullopt);

// Greedy grooming construction (largest demand first, unsplit) followed by
// local search; only strict improvements are accepted. The seed shuffles ties.
SolveReport SolveHeuristic(const Model& model, uint64_t seed = 1,
                           const SolveLimits& limits = {});

}  // namespace ipwdm

#endif  // IPWDM_SOLVE_H_
