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

#ifndef IPWDM_SRC_CAPACITY_STATE_H_
#define IPWDM_SRC_CAPACITY_STATE_H_

#include <span>
#include <vector>

#include "ipwdm/cost.h"
#include "ipwdm/milp.h"

namespace ipwdm::internal {

struct LightpathSlot {
  int var = -1;
  int pair_block = -1;
  int lambda_type = -1;
  NodeIndex from = kNoNode;
  NodeIndex to = kNoNode;
  std::vector<EdgeIndex> edges;
};

// Light-path counts together with the cheapest fibers and node modules they
// force. Fibers per edge are ceil(load / B); each node gets the cheapest
// module satisfying its rows. Cost is kept up to date incrementally.
class CapacityState {
 public:
  explicit CapacityState(const Model& model);

  const Model& model() const { return *model_; }
  int num_slots() const { return static_cast<int>(slots_.size()); }
  const LightpathSlot& slot(int s) const { return slots_[s]; }
  int SlotOfVar(int var) const { return slot_of_var_.at(var); }
  std::span<const int> PairSlots(int pair_block) const { return pair_slots_[pair_block]; }
  int num_pairs() const { return static_cast<int>(pair_slots_.size()); }

  int count(int s) const { return count_[s]; }
  void Add(int s, int delta);
  void Reset();

  // Routing capacity (sum of A y) installed on a pair block.
  int64_t pair_capacity(int pair_block) const { return pair_capacity_[pair_block]; }
  Cost cost() const;
  bool feasible() const { return overloaded_ == 0; }

  int fibers(EdgeIndex e) const { return fibers_[e]; }
  // -1 when the node needs no module.
  int virtual_module(NodeIndex n) const { return vmod_[n]; }
  int physical_module(NodeIndex n) const { return pmod_[n]; }
  int64_t switching_load(NodeIndex n) const { return switching_[n]; }
  int64_t slot_load_fourteenths(NodeIndex n) const { return slot14_[n]; }
  int64_t add_drop_load(NodeIndex n) const { return add_drop_[n]; }
  int64_t fiber_degree(NodeIndex n) const { return degree_[n]; }

  // Writes light paths, fibers and modules into `solution`; flow entries are
  // left untouched.
  void Fill(Solution& solution) const;

 private:
  static constexpr int kOverloaded = -2;

  void RefreshEdge(EdgeIndex e);
  void RefreshVirtual(NodeIndex n);
  void RefreshPhysical(NodeIndex n);
  void SetNodeCost(std::vector<int>& choice, std::vector<Cost>& costs, NodeIndex n, int pick,
                   Cost c);

  const Model* model_;
  std::vector<LightpathSlot> slots_;
  std::vector<int> slot_of_var_;
  std::vector<std::vector<int>> pair_slots_;
  std::vector<int> count_;
  std::vector<int64_t> pair_capacity_;
  std::vector<int64_t> edge_load_;
  std::vector<int> fibers_;
  std::vector<int64_t> switching_, slot14_, add_drop_, degree_;
  std::vector<int64_t> base_switching_;
  std::vector<int> vmod_, pmod_;
  std::vector<Cost> vmod_cost_, pmod_cost_;
  std::vector<Cost> fiber_unit_;
  std::vector<std::vector<NodeIndex>> edge_nodes_;
  int64_t lambda_micros_ = 0;
  int64_t fiber_micros_ = 0;
  int64_t module_micros_ = 0;
  int overloaded_ = 0;
};

}  // namespace ipwdm::internal

#endif  // IPWDM_SRC_CAPACITY_STATE_H_
