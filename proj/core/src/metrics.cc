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

#include "ipwdm/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>

namespace ipwdm {
namespace {

constexpr double kTolerance = 1e-6;
constexpr double kFlowEpsilon = 1e-9;

// Port prices in twelfths of a unit.
int64_t PortTwelfths(int speed_gbps) {
  if (speed_gbps == 10) return 19;
  if (speed_gbps == 100) return 16 * 12;
  throw Error("no edge port price for " + std::to_string(speed_gbps) + "G");
}

Cost FromTwelfths(int64_t twelfths) {
  const int64_t num = twelfths * Cost::kMicrosPerUnit;
  return Cost::FromMicros((num + 6) / 12);
}

double Clamp(double x, const char* what, NodeIndex i) {
  if (x < -kTolerance) {
    throw Error(std::string("internal inconsistency: negative ") + what + " at node " +
                std::to_string(i));
  }
  return std::max(0.0, x);
}

}  // namespace

std::vector<double> DisaggregateFlows(const Model& model, const Solution& solution,
                                      const PathCatalog& catalog) {
  if (model.catalog_size() != catalog.num_paths()) {
    throw Error("path catalog does not match the model");
  }
  std::vector<double> f(catalog.num_paths(), 0.0);
  for (const PairBlock& b : model.pair_blocks()) {
    double remaining = 0;
    for (int v : b.flow_vars) remaining += solution.values.at(v);
    // Capacity per path, in the block's path order.
    std::vector<std::pair<PathIndex, double>> caps;
    for (int v : b.lightpath_vars) {
      const Variable& var = model.variable(v);
      const double cap = model.lambda_types()[var.lambda_type].routing_gbps *
                         std::round(solution.values.at(v));
      if (caps.empty() || caps.back().first != var.path) {
        caps.emplace_back(var.path, cap);
      } else {
        caps.back().second += cap;
      }
    }
    for (auto [p, cap] : caps) {
      const double put = std::min(remaining, cap);
      if (put <= 0) continue;
      f[p] = put;
      remaining -= put;
    }
    if (remaining > kTolerance) {
      throw Error("flow exceeds light-path capacity on pair " + std::to_string(b.i) + "-" +
                  std::to_string(b.j));
    }
  }
  return f;
}

double IpTransit(NodeIndex i, const PathCatalog& catalog, std::span<const double> path_flow,
                 double node_demand) {
  double ending = 0;
  for (PathIndex p : catalog.EndingAt(i)) ending += path_flow[p];
  return Clamp((ending - node_demand) / 2, "IP transit", i);
}

double WdmTransit(NodeIndex i, const PathCatalog& catalog, std::span<const double> path_flow) {
  double through = 0;
  double ending = 0;
  for (PathIndex p : catalog.Through(i)) through += path_flow[p];
  for (PathIndex p : catalog.EndingAt(i)) ending += path_flow[p];
  return Clamp(through - ending, "WDM transit", i);
}

std::optional<double> Opacity(double f_ip, double f_wdm) {
  if (f_ip + f_wdm <= 0) return std::nullopt;
  return 100.0 * f_ip / (f_ip + f_wdm);
}

Cost EdgePortCost(int speed_gbps) { return FromTwelfths(PortTwelfths(speed_gbps)); }

Cost EdgeCost(std::span<const int64_t> node_demand, std::span<const int> speeds_gbps) {
  std::set<int> speeds(speeds_gbps.begin(), speeds_gbps.end());
  speeds.insert(10);
  int64_t twelfths = 0;
  for (int64_t d : node_demand) {
    if (d <= 0) continue;
    int64_t best = std::numeric_limits<int64_t>::max();
    for (int s : speeds) {
      const int64_t circuits = (d + s - 1) / s;
      best = std::min(best, 2 * circuits * PortTwelfths(s));
    }
    twelfths += best;
  }
  return FromTwelfths(twelfths);
}

Cost TransparentEdgeCost(const Model& model, const Solution& solution) {
  int64_t twelfths = 0;
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    if (var.kind != VarKind::kLightpath) continue;
    const int64_t y = std::llround(solution.values.at(v));
    twelfths += 2 * y * PortTwelfths(model.lambda_types()[var.lambda_type].speed_gbps);
  }
  return FromTwelfths(twelfths);
}

int CountIpPaths(const Model& model, const Solution& solution) {
  const int n = static_cast<int>(model.node_blocks().size());
  std::set<std::pair<NodeIndex, std::vector<NodeIndex>>> seen;
  for (NodeIndex s : model.sources()) {
    // Residual arc flows and remaining demand per target.
    std::vector<std::map<NodeIndex, double>> arcs(n);
    for (int v = 0; v < model.num_variables(); ++v) {
      const Variable& var = model.variable(v);
      if (var.kind != VarKind::kFlow || var.source != s) continue;
      const double x = solution.values.at(v);
      if (x > kFlowEpsilon) arcs[var.from][var.to] += x;
    }
    std::vector<double> want(n, 0.0);
    for (const Demand& d : model.demands()) {
      if (d.source == s) want[d.target] += static_cast<double>(d.gbps);
    }
    for (;;) {
      // BFS in ascending node order; nearest target with demand left.
      std::vector<NodeIndex> parent(n, kNoNode);
      std::vector<bool> seen_node(n, false);
      std::deque<NodeIndex> queue{s};
      seen_node[s] = true;
      NodeIndex hit = kNoNode;
      while (!queue.empty() && hit == kNoNode) {
        const NodeIndex u = queue.front();
        queue.pop_front();
        for (auto [v, x] : arcs[u]) {
          if (seen_node[v] || x <= kFlowEpsilon) continue;
          seen_node[v] = true;
          parent[v] = u;
          if (want[v] > kFlowEpsilon) {
            hit = v;
            break;
          }
          queue.push_back(v);
        }
      }
      if (hit == kNoNode) break;
      std::vector<NodeIndex> path;
      for (NodeIndex v = hit; v != kNoNode; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      double amount = want[hit];
      for (size_t h = 0; h + 1 < path.size(); ++h) {
        amount = std::min(amount, arcs[path[h]][path[h + 1]]);
      }
      for (size_t h = 0; h + 1 < path.size(); ++h) arcs[path[h]][path[h + 1]] -= amount;
      want[hit] -= amount;
      seen.emplace(s, std::move(path));
    }
  }
  return static_cast<int>(seen.size());
}

TransitReport BuildReport(const Instance& instance, const PathCatalog& catalog,
                          const Model& model, const Solution& solution) {
  TransitReport r;
  r.architecture = model.architecture();
  r.path_flow = DisaggregateFlows(model, solution, catalog);
  const std::vector<int64_t> demand = NodeDemand(instance);
  for (NodeIndex i : instance.pops()) {
    NodeTransit t;
    t.node = i;
    t.name = instance.graph().node(i).name;
    t.demand = static_cast<double>(demand[i]);
    t.f_ip = IpTransit(i, catalog, r.path_flow, t.demand);
    t.f_wdm = WdmTransit(i, catalog, r.path_flow);
    t.opacity = Opacity(t.f_ip, t.f_wdm);
    r.f_ip += t.f_ip;
    r.f_wdm += t.f_wdm;
    r.nodes.push_back(std::move(t));
  }
  r.opacity = Opacity(r.f_ip, r.f_wdm);
  for (const LambdaType& t : model.lambda_types()) r.lambdas_by_speed.emplace_back(t.speed_gbps, 0);
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    if (var.kind != VarKind::kLightpath) continue;
    const int64_t y = std::llround(solution.values.at(v));
    r.lambdas += y;
    r.lambdas_by_speed[var.lambda_type].second += y;
  }
  r.ip_paths = CountIpPaths(model, solution);
  r.core_cost = EvaluateCost(model, solution, /*final_cost=*/true);
  r.edge_cost = model.architecture() == Architecture::kTransparentCore
                    ? TransparentEdgeCost(model, solution)
                    : EdgeCost(demand, instance.params().speeds_gbps);
  r.total_cost = r.core_cost + r.edge_cost;
  return r;
}

std::string FormatOpacity(const std::optional<double>& phi) {
  if (!phi) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *phi);
  return buf;
}

void WriteReportJson(const TransitReport& report, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["architecture"] = std::string(ArchitectureName(report.architecture));
  j["core_cost"] = report.core_cost.units();
  j["edge_cost"] = report.edge_cost.units();
  j["total_cost"] = report.total_cost.units();
  j["f_ip"] = report.f_ip;
  j["f_wdm"] = report.f_wdm;
  j["opacity"] = report.opacity ? ordered_json(*report.opacity) : ordered_json(nullptr);
  j["lambdas"] = report.lambdas;
  ordered_json by_speed = ordered_json::object();
  for (auto [speed, count] : report.lambdas_by_speed) by_speed[std::to_string(speed) + "G"] = count;
  j["lambdas_by_speed"] = by_speed;
  j["ip_paths"] = report.ip_paths;
  ordered_json nodes = ordered_json::array();
  for (const NodeTransit& t : report.nodes) {
    nodes.push_back({{"node", t.name},
                     {"demand", t.demand},
                     {"f_ip", t.f_ip},
                     {"f_wdm", t.f_wdm},
                     {"opacity", t.opacity ? ordered_json(*t.opacity) : ordered_json(nullptr)}});
  }
  j["nodes"] = nodes;
  ordered_json paths = ordered_json::array();
  for (size_t p = 0; p < report.path_flow.size(); ++p) {
    if (report.path_flow[p] > 0) paths.push_back({{"path", p}, {"flow", report.path_flow[p]}});
  }
  j["path_flows"] = paths;
  out << j.dump(2) << "\n";
}

void WriteReportCsv(const TransitReport& report, std::ostream& out) {
  out << "node,demand,f_ip,f_wdm,opacity\n";
  for (const NodeTransit& t : report.nodes) {
    out << t.name << ',' << t.demand << ',' << t.f_ip << ',' << t.f_wdm << ','
        << FormatOpacity(t.opacity) << "\n";
  }
  out << "network,," << report.f_ip << ',' << report.f_wdm << ',' << FormatOpacity(report.opacity)
      << "\n";
}

}  // namespace ipwdm
