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

#ifndef IPWDM_NETMODEL_H_
#define IPWDM_NETMODEL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipwdm/cost.h"

namespace ipwdm {

using NodeIndex = int32_t;
using EdgeIndex = int32_t;

inline constexpr NodeIndex kNoNode = -1;

struct GeoPoint {
  double longitude = 0;
  double latitude = 0;
};

struct Node {
  std::string name;
  std::optional<GeoPoint> position;
};

struct Edge {
  std::string name;
  NodeIndex a = kNoNode;
  NodeIndex b = kNoNode;
  double length_km = 0;

  NodeIndex Other(NodeIndex n) const { return n == a ? b : a; }
};

// Undirected fiber topology. Parallel edges are allowed as long as their
// names differ.
class PhysicalGraph {
 public:
  NodeIndex AddNode(std::string name,
                    std::optional<GeoPoint> position = std::nullopt);
  EdgeIndex AddEdge(std::string name, NodeIndex a, NodeIndex b,
                    double length_km);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Node& node(NodeIndex n) const { return nodes_.at(n); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeIndex> incident(NodeIndex n) const {
    return incident_.at(n);
  }

  std::optional<NodeIndex> FindNode(std::string_view name) const;
  // Throws Error when the name is unknown.
  NodeIndex NodeByName(std::string_view name) const;

  // Connected component label per node.
  std::vector<int> Components() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::map<std::string, NodeIndex, std::less<>> node_by_name_;
  std::map<std::string, EdgeIndex, std::less<>> edge_by_name_;
};

// An undirected, symmetric constant bit-rate demand in Gbps.
struct Demand {
  NodeIndex source = kNoNode;
  NodeIndex target = kNoNode;
  int64_t gbps = 0;

  friend bool operator==(const Demand&, const Demand&) = default;
};

enum class Architecture { kOptimized, kTransparentCore };

std::string_view ArchitectureName(Architecture a);
Architecture ParseArchitecture(std::string_view text);

struct ScenarioParams {
  // Non-empty subset of {10, 100}, ascending.
  std::vector<int> speeds_gbps = {10};
  int channels_per_fiber = 40;
  double max_path_km = 750.0;
  int max_paths_per_pair = 50;
  // Multiplier on transponder unit cost.
  double transponder_scale = 1.0;
  Architecture architecture = Architecture::kOptimized;
};

// Immutable problem instance. Construction validates everything and brings
// demands into canonical form: one demand per unordered PoP pair with
// source < target by node index, duplicates merged by summation.
class Instance {
 public:
  Instance(PhysicalGraph graph, std::vector<NodeIndex> pops,
           std::vector<Demand> demands, ScenarioParams params);

  const PhysicalGraph& graph() const { return graph_; }
  // Sorted ascending.
  std::span<const NodeIndex> pops() const { return pops_; }
  bool is_pop(NodeIndex n) const { return is_pop_.at(n); }
  std::span<const Demand> demands() const { return demands_; }
  const ScenarioParams& params() const { return params_; }
  int64_t total_demand() const;

  Instance WithDemands(std::vector<Demand> demands) const;
  Instance WithParams(ScenarioParams params) const;

 private:
  PhysicalGraph graph_;
  std::vector<NodeIndex> pops_;
  std::vector<bool> is_pop_;
  std::vector<Demand> demands_;
  ScenarioParams params_;
};

// d(i): total demand terminating at each node, indexed by NodeIndex.
std::vector<int64_t> NodeDemand(const Instance& instance);

struct RawEntry {
  NodeIndex a = kNoNode;
  NodeIndex b = kNoNode;
  double value = 0;
};

// Scales raw values proportionally so they sum to target_gbps and rounds each
// up to whole Gbps. Zero entries produce no demand. Entries for the same
// unordered pair are merged before scaling.
std::vector<Demand> ScaleDemandMatrix(std::span<const RawEntry> raw,
                                      double target_gbps);

enum class MatrixMode { kCentralized, kDecentralized };

struct SynthSpec {
  MatrixMode mode = MatrixMode::kDecentralized;
  // Used only in centralized mode.
  NodeIndex hub = kNoNode;
  double hub_factor = 1.0;
};

// Gravity matrix w_i * w_j over all unordered pairs of `pops`; in centralized
// mode the hub's weight is multiplied by hub_factor first.
std::vector<Demand> SynthMatrix(const SynthSpec& spec,
                                std::span<const NodeIndex> pops,
                                std::span<const double> weights,
                                double target_gbps);

}  // namespace ipwdm

#endif  // IPWDM_NETMODEL_H_
