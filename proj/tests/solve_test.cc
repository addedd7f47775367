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

#include "ipwdm/solve.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "ipwdm/metrics.h"
#include "oracle.h"

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

TEST(CheckFeasibility, ZeroSolutionZeroDemands) {
  const Built b = Build(fixtures::TwoPop(0));
  EXPECT_TRUE(CheckFeasibility(b.model, ZeroSolution(b.model)).empty());
}

TEST(CheckFeasibility, LightpathWithoutFiber) {
  const Built b = Build(fixtures::TwoPop(0));
  Solution s = ZeroSolution(b.model);
  s.values[b.model.LightpathVar(0, 0)] = 1;
  for (const NodeBlock& n : b.model.node_blocks()) {
    s.values[n.virtual_module_vars[0]] = 1;
    s.values[n.physical_module_vars[0]] = 1;
  }
  const auto v = CheckFeasibility(b.model, s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kRow);
  EXPECT_EQ(v[0].row_kind, RowKind::kPhysicalLinkCapacity);
  EXPECT_EQ(v[0].name, "pcap_e0");
  EXPECT_NE(v[0].description.find("<= B y_e"), std::string::npos);
}

TEST(CheckFeasibility, FlowAboveLightpathCapacity) {
  const Built b = Build(fixtures::TwoPop(11));
  Solution s = ZeroSolution(b.model);
  s.values[b.model.LightpathVar(0, 0)] = 1;
  s.values[b.model.edge_blocks()[0].fiber_var] = 1;
  s.values[b.model.FlowVar(0, 0, 1)] = 11;
  for (const NodeBlock& n : b.model.node_blocks()) {
    s.values[n.virtual_module_vars[0]] = 1;
    s.values[n.physical_module_vars[0]] = 1;
  }
  const auto v = CheckFeasibility(b.model, s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].row_kind, RowKind::kVirtualLinkCapacity);
  EXPECT_DOUBLE_EQ(v[0].lhs - v[0].rhs, 1.0);
}

TEST(CheckFeasibility, BoundsAndIntegrality) {
  const Built b = Build(fixtures::TwoPop(0));
  Solution s = ZeroSolution(b.model);
  s.values[b.model.edge_blocks()[0].fiber_var] = 0.5;
  s.values[b.model.node_blocks()[0].physical_module_vars[0]] = 2;
  bool integrality = false, bound = false;
  for (const Violation& v : CheckFeasibility(b.model, s)) {
    integrality |= v.kind == ViolationKind::kIntegrality;
    bound |= v.kind == ViolationKind::kBound;
  }
  EXPECT_TRUE(integrality);
  EXPECT_TRUE(bound);
}

TEST(CheckFeasibility, ContinuousRowsTolerateTinyErrors) {
  const Built b = Build(fixtures::TwoPop(10));
  Solution s = ZeroSolution(b.model);
  s.values[b.model.LightpathVar(0, 0)] = 1;
  s.values[b.model.edge_blocks()[0].fiber_var] = 1;
  s.values[b.model.FlowVar(0, 0, 1)] = 10 + 5e-7;
  for (const NodeBlock& n : b.model.node_blocks()) {
    s.values[n.virtual_module_vars[0]] = 1;
    s.values[n.physical_module_vars[0]] = 1;
  }
  EXPECT_TRUE(CheckFeasibility(b.model, s).empty());
  s.values[b.model.FlowVar(0, 0, 1)] = 10 + 1e-4;
  EXPECT_FALSE(CheckFeasibility(b.model, s).empty());
}

TEST(SolveExact, ZeroDemandsOptimalZero) {
  const Built b = Build(fixtures::TwoPop(0));
  const SolveReport r = SolveExact(b.model);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.objective, Cost::Zero());
}

TEST(SolveExact, StarOverloadInfeasible) {
  const Built b = Build(fixtures::StarOverload(Architecture::kTransparentCore));
  const SolveReport r = SolveExact(b.model);
  EXPECT_EQ(r.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(r.best.has_value());
}

TEST(SolveExact, MatchesOracleOnRandomTinyInstances) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = fixtures::TinyRandom(rng);
    const auto want = oracle::ExhaustiveOptimum(inst);
    const Built b = Build(inst);
    const SolveReport r = SolveExact(b.model);
    ASSERT_NE(r.status, SolveStatus::kUnknown);
    ASSERT_EQ(want.has_value(), r.best.has_value()) << "trial " << trial;
    if (!want) continue;
    EXPECT_EQ(r.objective.micros(), *want) << "trial " << trial;
    EXPECT_EQ(r.bound, r.objective);
    EXPECT_TRUE(CheckFeasibility(b.model, *r.best).empty());
    EXPECT_EQ(EvaluateCost(b.model, *r.best), r.objective);
  }
}

TEST(SolveExact, DeterministicSolutions) {
  const Built b = Build(fixtures::Line());
  const SolveReport x = SolveExact(b.model);
  const SolveReport y = SolveExact(b.model);
  ASSERT_TRUE(x.best && y.best);
  EXPECT_EQ(x.best->values, y.best->values);
  EXPECT_EQ(x.stats.nodes, y.stats.nodes);
}

TEST(SolveExact, NodeLimitGivesUnknownWithIncumbent) {
  std::mt19937_64 rng(2);
  const Built b = Build(fixtures::MidRandom(rng));
  const SolveReport h = SolveHeuristic(b.model, 1);
  SolveLimits limits;
  limits.max_nodes = 3;
  const SolveReport r = SolveExact(b.model, limits, h.best);
  EXPECT_EQ(r.status, SolveStatus::kUnknown);
  if (h.best) {
    ASSERT_TRUE(r.best);
    EXPECT_LE(r.objective, h.objective);
    EXPECT_LE(r.bound, r.objective);
  }
}

TEST(SolveHeuristic, TwoPopFindsOptimum) {
  const Built b = Build(fixtures::TwoPop(25));
  const SolveReport h = SolveHeuristic(b.model, 1);
  const SolveReport e = SolveExact(b.model);
  ASSERT_TRUE(h.best);
  EXPECT_EQ(h.objective, e.objective);
  EXPECT_EQ(h.best->values[b.model.LightpathVar(0, 0)], 3);
}

TEST(SolveHeuristic, NeverBelowExactOptimum) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Built b = Build(fixtures::TinyRandom(rng));
    const SolveReport e = SolveExact(b.model);
    const SolveReport h = SolveHeuristic(b.model, trial + 1);
    if (!e.best || !h.best) continue;
    EXPECT_GE(h.objective, e.objective) << "trial " << trial;
  }
}

TEST(SolveHeuristic, FeasibleAndSeedDeterministic) {
  std::mt19937_64 rng(123);
  int solved = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = fixtures::MidRandom(rng);
    std::optional<Built> b;
    try {
      b = Build(inst);
    } catch (const Error&) {
      continue;
    }
    const SolveReport x = SolveHeuristic(b->model, 7);
    const SolveReport y = SolveHeuristic(b->model, 7);
    ASSERT_EQ(x.best.has_value(), y.best.has_value());
    if (!x.best) continue;
    ++solved;
    EXPECT_EQ(x.best->values, y.best->values);
    EXPECT_TRUE(CheckFeasibility(b->model, *x.best).empty());
    EXPECT_EQ(x.status, SolveStatus::kFeasible);
  }
  EXPECT_GE(solved, 10);
}

TEST(SolveHeuristic, ImprovementNeverIncreasesCost) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = fixtures::MidRandom(rng);
    std::optional<Built> b;
    try {
      b = Build(inst);
    } catch (const Error&) {
      continue;
    }
    SolveLimits construct_only;
    construct_only.max_improve_rounds = 0;
    const SolveReport c = SolveHeuristic(b->model, 3, construct_only);
    Cost prev = c.objective;
    for (int rounds : {1, 2, 5, 50}) {
      SolveLimits l;
      l.max_improve_rounds = rounds;
      const SolveReport r = SolveHeuristic(b->model, 3, l);
      ASSERT_EQ(r.best.has_value(), c.best.has_value());
      if (!r.best) break;
      EXPECT_LE(r.objective, prev);
      EXPECT_TRUE(CheckFeasibility(b->model, *r.best).empty());
      prev = r.objective;
    }
  }
}

TEST(SolveHeuristic, CircuitMultiplesNeedNoIpTransit) {
  const Built b = Build(fixtures::FromText(
      "node a\nnode b\nnode c\nnode d\npop a b c d\n"
      "link ab a b 80\nlink bc b c 80\nlink cd c d 80\nlink da d a 80\n"
      "demand a b 20\ndemand a c 30\ndemand a d 10\ndemand b c 10\ndemand b d 40\n"
      "demand c d 20\n"));
  const SolveReport h = SolveHeuristic(b.model, 1);
  ASSERT_TRUE(h.best);
  const TransitReport r = BuildReport(b.instance, b.catalog, b.model, *h.best);
  EXPECT_EQ(r.f_ip, 0.0);
  ASSERT_TRUE(r.opacity);
  EXPECT_EQ(*r.opacity, 0.0);
}

TEST(SolveHeuristic, TransparentStarOverloadUnsolved) {
  const Built b = Build(fixtures::StarOverload(Architecture::kTransparentCore));
  const SolveReport h = SolveHeuristic(b.model, 1);
  EXPECT_EQ(h.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(h.best);
}

TEST(SolveStatus, Names) {
  EXPECT_EQ(SolveStatusName(SolveStatus::kOptimal), "optimal");
  EXPECT_EQ(SolveStatusName(SolveStatus::kFeasible), "feasible");
  EXPECT_EQ(SolveStatusName(SolveStatus::kInfeasible), "infeasible");
  EXPECT_EQ(SolveStatusName(SolveStatus::kUnknown), "unknown");
}

}  // namespace
}  // namespace ipwdm
