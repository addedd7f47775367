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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.h"
#include "ipwdm/solve.h"

namespace ipwdm {
namespace {

struct Built {
  Instance instance;
  PathCatalog catalog;
  CostCatalog costs;
  Model model;
};

Built Build(Instance inst) {
  PathCatalog c = PathCatalog::Build(inst);
  CostCatalog k = CostCatalog::Build(inst);
  Model m = BuildModelFor(inst, c, k);
  return {std::move(inst), std::move(c), std::move(k), std::move(m)};
}

Instance ParallelLinks(int64_t demand) {
  return fixtures::FromText("node a\nnode b\npop a b\nlink x a b 100\nlink y a b 120\ndemand a b " +
                            std::to_string(demand) + "\n");
}

TEST(DisaggregateFlows, TwoLambdasOnePath) {
  const Built b = Build(fixtures::TwoPop(15));
  Solution s = ZeroSolution(b.model);
  s.values[b.model.LightpathVar(0, 0)] = 2;
  s.values[b.model.FlowVar(0, 0, 1)] = 15;
  EXPECT_EQ(DisaggregateFlows(b.model, s, b.catalog), std::vector<double>{15});
}

TEST(DisaggregateFlows, ShortestPathFilledFirst) {
  const Built b = Build(ParallelLinks(15));
  ASSERT_EQ(b.catalog.num_paths(), 2);
  Solution s = ZeroSolution(b.model);
  s.values[b.model.LightpathVar(0, 0)] = 1;
  s.values[b.model.LightpathVar(1, 0)] = 1;
  s.values[b.model.FlowVar(0, 0, 1)] = 15;
  EXPECT_EQ(DisaggregateFlows(b.model, s, b.catalog), (std::vector<double>{10, 5}));
}

TEST(DisaggregateFlows, ZeroFlowAndOverload) {
  const Built b = Build(ParallelLinks(15));
  Solution s = ZeroSolution(b.model);
  EXPECT_EQ(DisaggregateFlows(b.model, s, b.catalog), (std::vector<double>{0, 0}));
  s.values[b.model.FlowVar(0, 0, 1)] = 15;
  s.values[b.model.LightpathVar(0, 0)] = 1;
  EXPECT_THROW(DisaggregateFlows(b.model, s, b.catalog), Error);
}

// Line catalog: path 0 = a-b, path 1 = a-c (through b), path 2 = b-c.
class LineTransit : public ::testing::Test {
 protected:
  PathCatalog catalog = PathCatalog::Build(fixtures::Line());
};

TEST_F(LineTransit, IpTransitFormula) {
  ASSERT_EQ(catalog.num_paths(), 3);
  const std::vector<double> f = {10, 0, 10};
  EXPECT_DOUBLE_EQ(IpTransit(1, catalog, f, 10), 5);
  EXPECT_DOUBLE_EQ(IpTransit(0, catalog, f, 10), 0);
  EXPECT_DOUBLE_EQ(IpTransit(1, catalog, std::vector<double>{0, 0, 0}, 0), 0);
  EXPECT_THROW(IpTransit(1, catalog, f, 40), Error);
}

TEST_F(LineTransit, WdmTransitFormula) {
  EXPECT_DOUBLE_EQ(WdmTransit(1, catalog, std::vector<double>{0, 7, 0}), 7);
  EXPECT_DOUBLE_EQ(WdmTransit(1, catalog, std::vector<double>{10, 0, 10}), 0);
  EXPECT_DOUBLE_EQ(WdmTransit(1, catalog, std::vector<double>{10, 7, 0}), 7);
}

TEST(Opacity, Cases) {
  EXPECT_NEAR(*Opacity(180, 4039), 4.2664, 1e-4);
  EXPECT_EQ(FormatOpacity(Opacity(180, 4039)), "4.3");
  EXPECT_EQ(*Opacity(0, 12), 0);
  EXPECT_EQ(*Opacity(5, 0), 100);
  EXPECT_FALSE(Opacity(0, 0).has_value());
  EXPECT_EQ(FormatOpacity(std::nullopt), "undefined");
}

TEST(EdgeCost, PortRule) {
  EXPECT_EQ(EdgeCost(std::vector<int64_t>{60, 60}, std::vector<int>{10}),
            Cost::FromMicros(38'000'000));
  EXPECT_EQ(EdgeCost(std::vector<int64_t>{3000, 3000}, std::vector<int>{10}),
            Cost::FromMicros(1'900'000'000));
  EXPECT_EQ(EdgeCost(std::vector<int64_t>{0, 0}, std::vector<int>{10}), Cost::Zero());
  // 10G interconnects stay available next to 100G circuits.
  EXPECT_EQ(EdgeCost(std::vector<int64_t>{3000}, std::vector<int>{100}),
            Cost::FromMicros(950'000'000));
  EXPECT_EQ(EdgeCost(std::vector<int64_t>{100}, std::vector<int>{100}),
            Cost::FromMicros(31'666'667));
  EXPECT_EQ(EdgePortCost(100), Cost::FromMicros(16'000'000));
}

TEST(TransparentEdgeCost, TwoPortsPerLightpath) {
  Instance inst = fixtures::TwoPop(25);
  ScenarioParams p = inst.params();
  p.architecture = Architecture::kTransparentCore;
  const Built b = Build(inst.WithParams(p));
  Solution s = ZeroSolution(b.model);
  s.values[b.model.LightpathVar(0, 0)] = 3;
  EXPECT_EQ(TransparentEdgeCost(b.model, s), Cost::FromMicros(9'500'000));
}

TEST(CountIpPaths, DirectSplitAndEmpty) {
  const Built line = Build(fixtures::FromText(
      "node a\nnode b\nnode c\npop a b c\nlink ab a b 60\nlink bc b c 60\ndemand a c 20\n"));
  Solution s = ZeroSolution(line.model);
  s.values[line.model.FlowVar(0, 0, 2)] = 20;
  EXPECT_EQ(CountIpPaths(line.model, s), 1);
  s.values[line.model.FlowVar(0, 0, 2)] = 12;
  s.values[line.model.FlowVar(0, 0, 1)] = 8;
  s.values[line.model.FlowVar(0, 1, 2)] = 8;
  EXPECT_EQ(CountIpPaths(line.model, s), 2);
  const Built empty = Build(fixtures::TwoPop(0));
  EXPECT_EQ(CountIpPaths(empty.model, ZeroSolution(empty.model)), 0);
}

TransitReport SolveAndReport(Instance inst) {
  const Built b = Build(std::move(inst));
  const SolveReport r = SolveExact(b.model);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  return BuildReport(b.instance, b.catalog, b.model, *r.best);
}

TEST(Report, GoldenTwoPop) {
  const TransitReport r = SolveAndReport(fixtures::TwoPop(25));
  EXPECT_EQ(r.lambdas, 3);
  EXPECT_EQ(r.ip_paths, 1);
  EXPECT_EQ(r.f_ip, 0);
  EXPECT_EQ(r.f_wdm, 0);
  EXPECT_FALSE(r.opacity);
  EXPECT_EQ(r.core_cost, Cost::FromMicros(96'980'000));
  EXPECT_EQ(r.edge_cost, Cost::FromMicros(19'000'000));
  EXPECT_EQ(r.total_cost, Cost::FromMicros(115'980'000));
}

TEST(Report, GoldenLineOptimized) {
  const TransitReport r = SolveAndReport(fixtures::Line());
  EXPECT_EQ(r.lambdas, 4);
  EXPECT_EQ(r.ip_paths, 3);
  EXPECT_EQ(r.f_ip, 0);
  EXPECT_EQ(r.f_wdm, 20);
  ASSERT_TRUE(r.opacity);
  EXPECT_EQ(*r.opacity, 0);
  EXPECT_EQ(r.path_flow, (std::vector<double>{10, 20, 10}));
  // 12 + 2 * 0.432 + 3 * 28 + 3 * 11.67, plus one 3-unit slot charge per router.
  EXPECT_EQ(r.core_cost, Cost::FromMicros(140'874'000));
  EXPECT_EQ(r.edge_cost.ToString(), "25.333333");
  ASSERT_EQ(r.nodes.size(), 3u);
  EXPECT_EQ(r.nodes[1].name, "b");
  EXPECT_EQ(r.nodes[1].f_wdm, 20);
  EXPECT_FALSE(r.nodes[0].opacity);
  std::ostringstream csv;
  WriteReportCsv(r, csv);
  EXPECT_EQ(csv.str(),
            "node,demand,f_ip,f_wdm,opacity\n"
            "a,30,0,0,undefined\n"
            "b,20,0,20,0.0\n"
            "c,30,0,0,undefined\n"
            "network,,0,20,0.0\n");
}

TEST(Report, GoldenLineTransparent) {
  Instance inst = fixtures::Line();
  ScenarioParams p = inst.params();
  p.architecture = Architecture::kTransparentCore;
  const TransitReport r = SolveAndReport(inst.WithParams(p));
  EXPECT_EQ(r.architecture, Architecture::kTransparentCore);
  EXPECT_EQ(r.lambdas, 4);
  EXPECT_EQ(r.core_cost, Cost::FromMicros(47'874'000));
  EXPECT_EQ(r.edge_cost.ToString(), "12.666667");
  EXPECT_EQ(*r.opacity, 0);
  std::ostringstream json;
  WriteReportJson(r, json);
  EXPECT_NE(json.str().find("\"architecture\": \"transparent\""), std::string::npos);
  EXPECT_NE(json.str().find("\"lambdas\": 4"), std::string::npos);
}

TEST(Report, InvariantsOnRandomHeuristicSolutions) {
  std::mt19937_64 rng(606);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = fixtures::MidRandom(rng);
    std::optional<Built> b;
    try {
      b = Build(inst);
    } catch (const Error&) {
      continue;
    }
    const SolveReport h = SolveHeuristic(b->model, 1);
    if (!h.best) continue;
    ++checked;
    const TransitReport r = BuildReport(b->instance, b->catalog, b->model, *h.best);
    double f_ip = 0, f_wdm = 0;
    for (const NodeTransit& t : r.nodes) {
      EXPECT_GE(t.f_ip, 0);
      EXPECT_GE(t.f_wdm, 0);
      if (t.opacity) {
        EXPECT_GE(*t.opacity, 0);
        EXPECT_LE(*t.opacity, 100);
      }
      f_ip += t.f_ip;
      f_wdm += t.f_wdm;
    }
    EXPECT_NEAR(r.f_ip, f_ip, 1e-9);
    if (r.opacity) EXPECT_NEAR(*r.opacity, 100 * f_ip / (f_ip + f_wdm), 1e-9);
    if (b->model.architecture() == Architecture::kTransparentCore) EXPECT_EQ(r.f_ip, 0);
    for (const PairBlock& pb : b->model.pair_blocks()) {
      double flow = 0, placed = 0;
      for (int v : pb.flow_vars) flow += h.best->values[v];
      for (PathIndex p : b->catalog.PairPaths(pb.pair_id)) placed += r.path_flow[p];
      EXPECT_NEAR(flow, placed, 1e-6);
      for (int v : pb.lightpath_vars) {
        const Variable& var = b->model.variable(v);
        double cap = 0;
        for (int w : pb.lightpath_vars) {
          if (b->model.variable(w).path == var.path) {
            cap += b->model.lambda_types()[b->model.variable(w).lambda_type].routing_gbps *
                   h.best->values[w];
          }
        }
        EXPECT_LE(r.path_flow[var.path], cap + 1e-6);
      }
    }
    EXPECT_EQ(r.total_cost, r.core_cost + r.edge_cost);
  }
  EXPECT_GE(checked, 20);
}

}  // namespace
}  // namespace ipwdm
