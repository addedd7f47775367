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

#include <chrono>
#include <cmath>

#include "capacity_state.h"
#include "flow_lp.h"
#include "ipwdm/solve.h"

namespace ipwdm {
namespace {

using internal::CapacityState;
using internal::FlowLp;

class Search {
 public:
  Search(const Model& model, const SolveLimits& limits)
      : model_(model), limits_(limits), cs_(model), lp_(model),
        start_(std::chrono::steady_clock::now()) {
    const int pairs = cs_.num_pairs();
    const int types = static_cast<int>(model.lambda_types().size());
    int64_t total = 0;
    for (const Demand& d : model.demands()) total += d.gbps;
    remaining_.assign(pairs, std::vector<int64_t>(types, 0));
    max_capacity_.assign(pairs, 0);
    for (int b = 0; b < pairs; ++b) {
      const int64_t need = model.architecture() == Architecture::kTransparentCore
                               ? static_cast<int64_t>(std::llround(lp_.fixed_load(b)))
                               : total;
      for (int t = 0; t < types; ++t) {
        const int64_t a = model.lambda_types()[t].routing_gbps;
        remaining_[b][t] = (need + a - 1) / a;
        max_capacity_[b] += remaining_[b][t] * a;
      }
      for (int s : cs_.PairSlots(b)) order_.push_back(s);
    }
    capacity_ = max_capacity_;
  }

  void Seed(const Solution& solution) {
    if (!CheckFeasibility(model_, solution).empty()) return;
    const Cost c = EvaluateCost(model_, solution);
    if (c < best_cost_) {
      best_cost_ = c;
      best_ = solution;
    }
  }

  SolveReport Run() {
    SolveReport report;
    report.bound = cs_.cost().is_infinite() ? Cost::Zero() : cs_.cost();
    if (order_.empty()) {
      Leaf();
    } else {
      Dfs(0);
    }
    report.stats.nodes = nodes_;
    report.stats.iterations = lp_calls_;
    report.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (best_) {
      report.best = best_;
      report.objective = best_cost_;
    }
    if (aborted_) {
      report.status = SolveStatus::kUnknown;
    } else if (best_) {
      report.status = SolveStatus::kOptimal;
      report.bound = best_cost_;
    } else {
      report.status = SolveStatus::kInfeasible;
    }
    return report;
  }

 private:
  bool OutOfBudget() {
    if (nodes_ >= limits_.max_nodes) return aborted_ = true;
    if ((nodes_ & 1023) == 0 && std::isfinite(limits_.time_limit_seconds)) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > limits_.time_limit_seconds) return aborted_ = true;
    }
    return false;
  }

  void Leaf() {
    ++lp_calls_;
    std::vector<double> caps(cs_.num_pairs());
    for (int b = 0; b < cs_.num_pairs(); ++b) caps[b] = static_cast<double>(cs_.pair_capacity(b));
    auto flows = lp_.Solve(caps);
    if (!flows) return;
    Record(*flows);
  }

  void Record(const std::vector<double>& flows) {
    const Cost c = cs_.cost();
    if (!(c < best_cost_)) return;
    Solution s = ZeroSolution(model_);
    cs_.Fill(s);
    lp_.Fill(flows, s);
    best_cost_ = c;
    best_ = std::move(s);
  }

  // Optimistic check once every slot of a pair block is fixed.
  bool GroupFeasible(int block, bool last) {
    capacity_[block] = cs_.pair_capacity(block);
    std::vector<double> caps(capacity_.begin(), capacity_.end());
    ++lp_calls_;
    auto flows = lp_.Solve(caps);
    if (!flows) return false;
    if (last) Record(*flows);
    return true;
  }

  void Dfs(size_t k) {
    if (aborted_) return;
    const int s = order_[k];
    const auto& slot = cs_.slot(s);
    const int b = slot.pair_block;
    const int t = slot.lambda_type;
    const bool group_end = k + 1 == order_.size() || cs_.slot(order_[k + 1]).pair_block != b;
    const int64_t limit = remaining_[b][t];
    int64_t applied = 0;
    for (int64_t v = 0; v <= limit; ++v) {
      if (v > 0) {
        cs_.Add(s, 1);
        ++applied;
      }
      ++nodes_;
      if (OutOfBudget()) break;
      if (!(cs_.cost() < best_cost_)) break;
      if (group_end) {
        const bool last = k + 1 == order_.size();
        if (!GroupFeasible(b, last) || last) continue;
      }
      remaining_[b][t] -= v;
      Dfs(k + 1);
      remaining_[b][t] += v;
      if (aborted_) break;
    }
    cs_.Add(s, -static_cast<int>(applied));
    if (group_end) capacity_[b] = max_capacity_[b];
  }

  const Model& model_;
  const SolveLimits& limits_;
  CapacityState cs_;
  FlowLp lp_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> order_;
  std::vector<std::vector<int64_t>> remaining_;
  std::vector<int64_t> max_capacity_;
  std::vector<int64_t> capacity_;
  Cost best_cost_ = Cost::Infinite();
  std::optional<Solution> best_;
  int64_t nodes_ = 0;
  int64_t lp_calls_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnknown: return "unknown";
  }
  return "?";
}

SolveReport SolveExact(const Model& model, const SolveLimits& limits,
                       const std::optional<Solution>& incumbent) {
  Search search(model, limits);
  if (incumbent) search.Seed(*incumbent);
  return search.Run();
}

}  // namespace ipwdm
