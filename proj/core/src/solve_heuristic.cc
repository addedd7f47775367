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

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>
#include <random>

#include "capacity_state.h"
#include "ipwdm/solve.h"

namespace ipwdm {
namespace {

using internal::CapacityState;

constexpr int64_t kResidualHopMicros = 1;
constexpr int64_t kInf = std::numeric_limits<int64_t>::max();

struct Option {
  // (slot, count) additions.
  std::vector<std::pair<int, int>> adds;
  int64_t delta = kInf;
};

class Heuristic {
 public:
  Heuristic(const Model& model, uint64_t seed, const SolveLimits& limits)
      : model_(model), limits_(limits), cs_(model), rng_(seed),
        start_(std::chrono::steady_clock::now()) {
    const int n = static_cast<int>(model.node_blocks().size());
    block_of_.assign(static_cast<size_t>(n) * n, -1);
    for (int b = 0; b < static_cast<int>(model.pair_blocks().size()); ++b) {
      const PairBlock& pb = model.pair_blocks()[b];
      block_of_[pb.i * n + pb.j] = block_of_[pb.j * n + pb.i] = b;
    }
    for (const NodeBlock& nb : model.node_blocks()) {
      if (nb.pop) pops_.push_back(nb.node);
    }
    num_types_ = static_cast<int>(model.lambda_types().size());
    load_.assign(model.pair_blocks().size(), 0);
    demands_.assign(model.demands().begin(), model.demands().end());
    routes_.resize(demands_.size());

    // Seeded tie-breaking.
    node_rank_.resize(n);
    std::iota(node_rank_.begin(), node_rank_.end(), 0);
    std::shuffle(node_rank_.begin(), node_rank_.end(), rng_);
    std::vector<uint64_t> key(demands_.size());
    for (auto& k : key) k = rng_();
    order_.resize(demands_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (demands_[a].gbps != demands_[b].gbps) return demands_[a].gbps > demands_[b].gbps;
      return key[a] < key[b];
    });
  }

  SolveReport Run() {
    SolveReport report;
    report.bound = cs_.cost().is_infinite() ? Cost::Zero() : cs_.cost();
    bool ok = true;
    for (int k : order_) {
      if (!Route(k)) {
        ok = false;
        break;
      }
    }
    if (ok && cs_.cost().is_infinite()) ok = false;
    if (ok) Improve();
    report.stats.iterations = iterations_;
    report.stats.nodes = rounds_;
    report.stats.wall_seconds = Elapsed();
    if (!ok) {
      report.status = SolveStatus::kInfeasible;
      return report;
    }
    Solution s = ZeroSolution(model_);
    cs_.Fill(s);
    for (size_t k = 0; k < demands_.size(); ++k) {
      const auto& route = routes_[k];
      for (size_t h = 0; h + 1 < route.size(); ++h) {
        const int v = model_.FlowVar(demands_[k].source, route[h], route[h + 1]);
        if (v < 0) throw Error("internal: route uses a pair without flow variables");
        if (!model_.variable(v).fixed()) s.values[v] += static_cast<double>(demands_[k].gbps);
      }
    }
    if (!CheckFeasibility(model_, s).empty()) {
      throw Error("internal: heuristic produced an infeasible solution");
    }
    report.status = SolveStatus::kFeasible;
    report.objective = EvaluateCost(model_, s);
    report.best = std::move(s);
    return report;
  }

 private:
  double Elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  int Block(NodeIndex i, NodeIndex j) const {
    return block_of_[static_cast<size_t>(i) * model_.node_blocks().size() + j];
  }

  bool transparent() const { return model_.architecture() == Architecture::kTransparentCore; }

  int64_t Evaluate(const std::vector<std::pair<int, int>>& adds) {
    ++iterations_;
    const Cost before = cs_.cost();
    for (auto [s, c] : adds) cs_.Add(s, c);
    const Cost after = cs_.cost();
    for (auto [s, c] : adds) cs_.Add(s, -c);
    if (after.is_infinite() || before.is_infinite()) return kInf;
    return after.micros() - before.micros();
  }

  // Cheapest set of new light paths, all on one physical path, that adds at
  // least `shortfall` Gbps to pair block b.
  Option BestOption(int b, int64_t shortfall) {
    Option best;
    if (shortfall <= 0) {
      best.delta = 0;
      return best;
    }
    std::vector<std::vector<int64_t>> mixes;
    for (int t = 0; t < num_types_; ++t) {
      const int64_t a = model_.lambda_types()[t].routing_gbps;
      std::vector<int64_t> mix(num_types_, 0);
      mix[t] = (shortfall + a - 1) / a;
      mixes.push_back(mix);
    }
    if (num_types_ == 2) {
      const int64_t lo = model_.lambda_types()[0].routing_gbps;
      const int64_t hi = model_.lambda_types()[1].routing_gbps;
      const int64_t big = shortfall / hi;
      const int64_t rest = shortfall - big * hi;
      if (big > 0 && rest > 0) mixes.push_back({(rest + lo - 1) / lo, big});
    }
    const auto slots = cs_.PairSlots(b);
    const int num_paths = static_cast<int>(slots.size()) / num_types_;
    for (const auto& mix : mixes) {
      for (int p = 0; p < num_paths; ++p) {
        std::vector<std::pair<int, int>> adds;
        for (int t = 0; t < num_types_; ++t) {
          if (mix[t] > 0) adds.emplace_back(slots[p * num_types_ + t], static_cast<int>(mix[t]));
        }
        const int64_t d = Evaluate(adds);
        if (d < best.delta) {
          best.delta = d;
          best.adds = std::move(adds);
        }
      }
    }
    return best;
  }

  int64_t Shortfall(int b, int64_t gbps) const {
    return load_[b] + gbps - cs_.pair_capacity(b);
  }

  // Shortest route on the virtual layer for demand k.
  std::vector<NodeIndex> FindRoute(int k) {
    const Demand& d = demands_[k];
    if (transparent()) {
      const int b = Block(d.source, d.target);
      if (b < 0) return {};
      if (Shortfall(b, d.gbps) > 0 && BestOption(b, Shortfall(b, d.gbps)).delta == kInf) return {};
      return {d.source, d.target};
    }
    const int n = static_cast<int>(model_.node_blocks().size());
    struct Label {
      int64_t cost = kInf;
      int hops = 0;
    };
    std::vector<Label> label(n);
    std::vector<NodeIndex> parent(n, kNoNode);
    std::vector<bool> done(n, false);
    std::vector<int64_t> hop_cost(model_.pair_blocks().size(), -1);
    auto better = [&](const Label& a, const Label& b) {
      return a.cost != b.cost ? a.cost < b.cost : a.hops < b.hops;
    };
    label[d.source] = {0, 0};
    for (;;) {
      NodeIndex u = kNoNode;
      for (NodeIndex v : pops_) {
        if (done[v] || label[v].cost == kInf) continue;
        if (u == kNoNode || better(label[v], label[u]) ||
            (!better(label[u], label[v]) && node_rank_[v] < node_rank_[u])) {
          u = v;
        }
      }
      if (u == kNoNode || u == d.target) break;
      done[u] = true;
      for (NodeIndex v : pops_) {
        if (done[v] || v == u) continue;
        const int b = Block(u, v);
        if (b < 0) continue;
        if (hop_cost[b] < 0) {
          const int64_t sf = Shortfall(b, d.gbps);
          hop_cost[b] = sf <= 0 ? kResidualHopMicros : BestOption(b, sf).delta;
        }
        if (hop_cost[b] == kInf) continue;
        const Label cand{label[u].cost + hop_cost[b], label[u].hops + 1};
        if (better(cand, label[v]) ||
            (!better(label[v], cand) && parent[v] != kNoNode && node_rank_[u] < node_rank_[parent[v]])) {
          label[v] = cand;
          parent[v] = u;
        }
      }
    }
    if (label[d.target].cost == kInf) return {};
    std::vector<NodeIndex> route;
    for (NodeIndex v = d.target; v != kNoNode; v = parent[v]) route.push_back(v);
    std::reverse(route.begin(), route.end());
    return route;
  }

  bool Route(int k) {
    std::vector<NodeIndex> route = FindRoute(k);
    if (route.empty()) return false;
    const int64_t g = demands_[k].gbps;
    for (size_t h = 0; h + 1 < route.size(); ++h) {
      const int b = Block(route[h], route[h + 1]);
      const int64_t sf = Shortfall(b, g);
      if (sf > 0) {
        Option o = BestOption(b, sf);
        if (o.delta == kInf) return false;
        for (auto [s, c] : o.adds) cs_.Add(s, c);
      }
      load_[b] += g;
    }
    routes_[k] = std::move(route);
    return true;
  }

  void Unroute(int k) {
    const auto& route = routes_[k];
    for (size_t h = 0; h + 1 < route.size(); ++h) {
      load_[Block(route[h], route[h + 1])] -= demands_[k].gbps;
    }
  }

  // Removes surplus light paths from pair block b while capacity allows.
  void TrimPair(int b) {
    const auto slots = cs_.PairSlots(b);
    for (;;) {
      int pick = -1;
      int64_t best = 0;
      for (int s : slots) {
        if (cs_.count(s) == 0) continue;
        const int64_t a = model_.lambda_types()[cs_.slot(s).lambda_type].routing_gbps;
        if (cs_.pair_capacity(b) - a < load_[b]) continue;
        const int64_t d = Evaluate({{s, -1}});
        if (pick < 0 || d < best) {
          pick = s;
          best = d;
        }
      }
      if (pick < 0) return;
      cs_.Add(pick, -1);
    }
  }

  struct Snapshot {
    CapacityState cs;
    std::vector<int64_t> load;
  };

  Snapshot Save() const { return {cs_, load_}; }
  void Restore(Snapshot s) {
    cs_ = std::move(s.cs);
    load_ = std::move(s.load);
  }

  bool OutOfTime() const {
    return std::isfinite(limits_.time_limit_seconds) && Elapsed() > limits_.time_limit_seconds;
  }

  bool RerouteMove() {
    bool improved = false;
    std::vector<int> order(order_);
    std::shuffle(order.begin(), order.end(), rng_);
    for (int k : order) {
      if (OutOfTime()) break;
      const Cost before = cs_.cost();
      Snapshot snap = Save();
      std::vector<NodeIndex> old_route = routes_[k];
      Unroute(k);
      for (size_t h = 0; h + 1 < old_route.size(); ++h) TrimPair(Block(old_route[h], old_route[h + 1]));
      if (Route(k) && cs_.cost() < before) {
        improved = true;
      } else {
        Restore(std::move(snap));
        routes_[k] = std::move(old_route);
      }
    }
    return improved;
  }

  bool TrimMove() {
    const Cost before = cs_.cost();
    for (int b = 0; b < cs_.num_pairs(); ++b) TrimPair(b);
    return cs_.cost() < before;
  }

  // Replaces every light path of the slowest type on a pair by a cheapest
  // re-cover of the missing capacity (e.g. several 10G by one 100G).
  bool MergeMove() {
    if (num_types_ < 2) return false;
    bool improved = false;
    for (int b = 0; b < cs_.num_pairs(); ++b) {
      const auto slots = cs_.PairSlots(b);
      int slow = 0;
      for (int s : slots) {
        if (cs_.slot(s).lambda_type == 0) slow += cs_.count(s);
      }
      if (slow < 2) continue;
      const Cost before = cs_.cost();
      Snapshot snap = Save();
      for (int s : slots) {
        if (cs_.slot(s).lambda_type == 0) cs_.Add(s, -cs_.count(s));
      }
      Option o = BestOption(b, load_[b] - cs_.pair_capacity(b));
      if (o.delta != kInf) {
        for (auto [s, c] : o.adds) cs_.Add(s, c);
      }
      if (o.delta != kInf && cs_.cost() < before) {
        improved = true;
      } else {
        Restore(std::move(snap));
      }
    }
    return improved;
  }

  // Moves single light paths to another physical path of the same pair.
  bool SwapMove() {
    bool improved = false;
    for (int b = 0; b < cs_.num_pairs(); ++b) {
      const auto slots = cs_.PairSlots(b);
      for (int s : slots) {
        while (cs_.count(s) > 0) {
          int pick = -1;
          int64_t best = 0;
          for (int o : slots) {
            if (o == s || cs_.slot(o).lambda_type != cs_.slot(s).lambda_type) continue;
            const int64_t d = Evaluate({{s, -1}, {o, 1}});
            if (d < best) {
              best = d;
              pick = o;
            }
          }
          if (pick < 0) break;
          cs_.Add(s, -1);
          cs_.Add(pick, 1);
          improved = true;
        }
      }
    }
    return improved;
  }

  void Improve() {
    for (rounds_ = 0; rounds_ < limits_.max_improve_rounds && !OutOfTime(); ++rounds_) {
      bool improved = false;
      if (!transparent()) improved |= RerouteMove();
      improved |= TrimMove();
      improved |= MergeMove();
      improved |= SwapMove();
      if (!improved) break;
    }
  }

  const Model& model_;
  const SolveLimits& limits_;
  CapacityState cs_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> block_of_;
  std::vector<NodeIndex> pops_;
  std::vector<int> node_rank_;
  int num_types_ = 1;
  std::vector<int64_t> load_;
  std::vector<Demand> demands_;
  std::vector<std::vector<NodeIndex>> routes_;
  std::vector<int> order_;
  int64_t iterations_ = 0;
  int rounds_ = 0;
};

}  // namespace

SolveReport SolveHeuristic(const Model& model, uint64_t seed, const SolveLimits& limits) {
  return Heuristic(model, seed, limits).Run();
}

}  // namespace ipwdm
