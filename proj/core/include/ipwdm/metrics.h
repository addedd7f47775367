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

#ifndef IPWDM_METRICS_H_
#define IPWDM_METRICS_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipwdm/cost.h"
#include "ipwdm/milp.h"
#include "ipwdm/netmodel.h"
#include "ipwdm/pathgen.h"

namespace ipwdm {

// Per catalog path: total bidirectional flow f_p. Each pair's virtual flow is
// poured onto its paths in catalog order (shortest first) up to A * y_p.
// Throws when a pair carries more flow than its light paths offer.
std::vector<double> DisaggregateFlows(const Model& model, const Solution& solution,
                                      const PathCatalog& catalog);

// F_IP(i) = (sum of f_p over paths ending at i - d(i)) / 2.
double IpTransit(NodeIndex i, const PathCatalog& catalog, std::span<const double> path_flow,
                 double node_demand);
// F_WDM(i) = sum of f_p over paths visiting i minus those ending at i.
double WdmTransit(NodeIndex i, const PathCatalog& catalog, std::span<const double> path_flow);

// 100 * F_IP / (F_IP + F_WDM); nullopt when both are zero.
std::optional<double> Opacity(double f_ip, double f_wdm);

// Per-port share of a Type2 linecard at a circuit speed: 19/12 for 10G,
// 16 for 100G.
Cost EdgePortCost(int speed_gbps);

// Edge-router interfaces for the optimized architecture: for every PoP,
// 2 * ceil(d(i) / speed) ports at the cheapest candidate speed. 10G
// interconnects are always available as a candidate.
Cost EdgeCost(std::span<const int64_t> node_demand, std::span<const int> speeds_gbps);

// Transparent-core edge cost: one core-facing port per light-path end.
Cost TransparentEdgeCost(const Model& model, const Solution& solution);

// Distinct (source, virtual path) entries of a shortest-hop-first flow
// decomposition of each aggregated source flow.
int CountIpPaths(const Model& model, const Solution& solution);

struct NodeTransit {
  NodeIndex node = kNoNode;
  std::string name;
  double demand = 0;
  double f_ip = 0;
  double f_wdm = 0;
  std::optional<double> opacity;
};

struct TransitReport {
  Architecture architecture = Architecture::kOptimized;
  std::vector<double> path_flow;
  std::vector<NodeTransit> nodes;
  double f_ip = 0;
  double f_wdm = 0;
  std::optional<double> opacity;
  int64_t lambdas = 0;
  std::vector<std::pair<int, int64_t>> lambdas_by_speed;
  int ip_paths = 0;
  // Objective plus the per-slot 10G line-card charge.
  Cost core_cost;
  Cost edge_cost;
  Cost total_cost;
};

TransitReport BuildReport(const Instance& instance, const PathCatalog& catalog,
                          const Model& model, const Solution& solution);

void WriteReportJson(const TransitReport& report, std::ostream& out);
// One header line and one line per PoP plus a "network" line.
void WriteReportCsv(const TransitReport& report, std::ostream& out);

// Opacity rendered with one decimal, or "undefined".
std::string FormatOpacity(const std::optional<double>& phi);

}  // namespace ipwdm

#endif  // IPWDM_METRICS_H_
