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

#include "ipwdm/netmodel.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace ipwdm {

NodeIndex PhysicalGraph::AddNode(std::string name,
                                 std::optional<GeoPoint> position) {
  if (name.empty()) throw Error("node name must not be empty");
  if (node_by_name_.contains(name)) throw Error("duplicate node '" + name + "'");
  const auto index = static_cast<NodeIndex>(nodes_.size());
  node_by_name_.emplace(name, index);
  nodes_.push_back(Node{std::move(name), position});
  incident_.emplace_back();
  return index;
}

EdgeIndex PhysicalGraph::AddEdge(std::string name, NodeIndex a, NodeIndex b,
                                 double length_km) {
  if (a < 0 || b < 0 || a >= num_nodes() || b >= num_nodes()) {
    throw Error("edge '" + name + "' references an unknown node");
  }
  if (a == b) throw Error("edge '" + name + "' is a self-loop");
  if (!(length_km > 0) || !std::isfinite(length_km)) {
    throw Error("edge '" + name + "' must have a positive length");
  }
  if (edge_by_name_.contains(name)) throw Error("duplicate edge '" + name + "'");
  const auto index = static_cast<EdgeIndex>(edges_.size());
  edge_by_name_.emplace(name, index);
  edges_.push_back(Edge{std::move(name), a, b, length_km});
  incident_[a].push_back(index);
  incident_[b].push_back(index);
  return index;
}

std::optional<NodeIndex> PhysicalGraph::FindNode(std::string_view name) const {
  auto it = node_by_name_.find(name);
  if (it == node_by_name_.end()) return std::nullopt;
  return it->second;
}

NodeIndex PhysicalGraph::NodeByName(std::string_view name) const {
  auto found = FindNode(name);
  if (!found) throw Error("unknown node '" + std::string(name) + "'");
  return *found;
}

std::vector<int> PhysicalGraph::Components() const {
  std::vector<int> label(nodes_.size(), -1);
  int next = 0;
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < num_nodes(); ++start) {
    if (label[start] >= 0) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      NodeIndex n = stack.back();
      stack.pop_back();
      for (EdgeIndex e : incident_[n]) {
        NodeIndex m = edges_[e].Other(n);
        if (label[m] < 0) {
          label[m] = next;
          stack.push_back(m);
        }
      }
    }
    ++next;
  }
  return label;
}

std::string_view ArchitectureName(Architecture a) {
  return a == Architecture::kOptimized ? "optimized" : "transparent";
}

Architecture ParseArchitecture(std::string_view text) {
  if (text == "optimized" || text == "hybrid") return Architecture::kOptimized;
  if (text == "transparent" || text == "transparent-core") {
    return Architecture::kTransparentCore;
  }
  throw Error("unknown architecture '" + std::string(text) + "'");
}

namespace {

void ValidateParams(const ScenarioParams& p) {
  if (p.speeds_gbps.empty()) throw Error("at least one circuit speed required");
  for (int s : p.speeds_gbps) {
    if (s != 10 && s != 100) {
      throw Error("unsupported circuit speed " + std::to_string(s));
    }
  }
  if (!std::is_sorted(p.speeds_gbps.begin(), p.speeds_gbps.end()) ||
      std::adjacent_find(p.speeds_gbps.begin(), p.speeds_gbps.end()) !=
          p.speeds_gbps.end()) {
    throw Error("circuit speeds must be ascending and distinct");
  }
  if (p.channels_per_fiber < 1) throw Error("channels per fiber must be >= 1");
  if (!(p.max_path_km > 0)) throw Error("max path length must be positive");
  if (p.max_paths_per_pair < 1) throw Error("max paths per pair must be >= 1");
  if (!(p.transponder_scale >= 1.0)) {
    throw Error("transponder scale must be >= 1");
  }
}

std::vector<Demand> Canonicalize(const PhysicalGraph& graph,
                                 const std::vector<bool>& is_pop,
                                 std::span<const Demand> demands) {
  std::map<std::pair<NodeIndex, NodeIndex>, int64_t> merged;
  for (const Demand& d : demands) {
    if (d.source < 0 || d.target < 0 || d.source >= graph.num_nodes() ||
        d.target >= graph.num_nodes()) {
      throw Error("demand references an unknown node");
    }
    if (!is_pop[d.source] || !is_pop[d.target]) {
      throw Error("demand " + graph.node(d.source).name + "-" +
                  graph.node(d.target).name + " has an endpoint outside the PoP set");
    }
    if (d.source == d.target) {
      throw Error("demand at " + graph.node(d.source).name +
                  " has identical endpoints");
    }
    if (d.gbps < 1) throw Error("demand values must be >= 1 Gbps");
    auto key = std::minmax(d.source, d.target);
    merged[{key.first, key.second}] += d.gbps;
  }
  std::vector<Demand> out;
  out.reserve(merged.size());
  for (const auto& [pair, value] : merged) {
    out.push_back(Demand{pair.first, pair.second, value});
  }
  return out;
}

}  // namespace

Instance::Instance(PhysicalGraph graph, std::vector<NodeIndex> pops,
                   std::vector<Demand> demands, ScenarioParams params)
    : graph_(std::move(graph)), params_(std::move(params)) {
  ValidateParams(params_);
  is_pop_.assign(graph_.num_nodes(), false);
  for (NodeIndex p : pops) {
    if (p < 0 || p >= graph_.num_nodes()) throw Error("PoP is not a graph node");
    if (is_pop_[p]) throw Error("duplicate PoP " + graph_.node(p).name);
    is_pop_[p] = true;
  }
  pops_ = std::move(pops);
  std::sort(pops_.begin(), pops_.end());
  demands_ = Canonicalize(graph_, is_pop_, demands);

  const std::vector<int> component = graph_.Components();
  for (const Demand& d : demands_) {
    if (component[d.source] != component[d.target]) {
      throw Error("demand " + graph_.node(d.source).name + "-" +
                  graph_.node(d.target).name +
                  " connects disconnected parts of the graph");
    }
  }
}

int64_t Instance::total_demand() const {
  int64_t total = 0;
  for (const Demand& d : demands_) total += d.gbps;
  return total;
}

Instance Instance::WithDemands(std::vector<Demand> demands) const {
  return Instance(graph_, pops_, std::move(demands), params_);
}

Instance Instance::WithParams(ScenarioParams params) const {
  return Instance(graph_, pops_, demands_, std::move(params));
}

std::vector<int64_t> NodeDemand(const Instance& instance) {
  std::vector<int64_t> d(instance.graph().num_nodes(), 0);
  for (const Demand& k : instance.demands()) {
    d[k.source] += k.gbps;
    d[k.target] += k.gbps;
  }
  return d;
}

std::vector<Demand> ScaleDemandMatrix(std::span<const RawEntry> raw,
                                      double target_gbps) {
  if (!(target_gbps > 0)) throw Error("target total must be positive");
  std::map<std::pair<NodeIndex, NodeIndex>, double> merged;
  double sum = 0;
  for (const RawEntry& e : raw) {
    if (!(e.value >= 0) || !std::isfinite(e.value)) {
      throw Error("raw demand values must be finite and non-negative");
    }
    if (e.value == 0) continue;
    if (e.a == e.b) throw Error("raw demand entry with identical endpoints");
    auto key = std::minmax(e.a, e.b);
    merged[{key.first, key.second}] += e.value;
    sum += e.value;
  }
  if (merged.empty()) throw Error("empty demand matrix");

  std::vector<Demand> out;
  out.reserve(merged.size());
  for (const auto& [pair, value] : merged) {
    double q = value * target_gbps / sum;
    // Quotients that are integral up to rounding noise are not bumped up.
    double nearest = std::round(q);
    double gbps = std::abs(q - nearest) <= 1e-9 * std::max(1.0, q)
                      ? nearest
                      : std::ceil(q);
    out.push_back(Demand{pair.first, pair.second,
                         std::max<int64_t>(1, static_cast<int64_t>(gbps))});
  }
  return out;
}

std::vector<Demand> SynthMatrix(const SynthSpec& spec,
                                std::span<const NodeIndex> pops,
                                std::span<const double> weights,
                                double target_gbps) {
  if (pops.size() < 2) throw Error("synthetic matrix needs at least two PoPs");
  if (weights.size() != pops.size()) {
    throw Error("one weight per PoP required");
  }
  std::vector<double> w(weights.begin(), weights.end());
  for (double x : w) {
    if (!(x > 0) || !std::isfinite(x)) throw Error("weights must be positive");
  }
  if (spec.mode == MatrixMode::kCentralized) {
    if (!(spec.hub_factor >= 1.0)) throw Error("hub factor must be >= 1");
    auto it = std::find(pops.begin(), pops.end(), spec.hub);
    if (it == pops.end()) throw Error("hub must be one of the PoPs");
    w[it - pops.begin()] *= spec.hub_factor;
  }
  std::vector<RawEntry> raw;
  for (size_t i = 0; i < pops.size(); ++i) {
    for (size_t j = i + 1; j < pops.size(); ++j) {
      raw.push_back(RawEntry{pops[i], pops[j], w[i] * w[j]});
    }
  }
  return ScaleDemandMatrix(raw, target_gbps);
}

}  // namespace ipwdm
