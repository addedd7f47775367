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

#include "ipwdm/costcat.h"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "fixtures.h"
#include "oracle.h"

namespace ipwdm {
namespace {

Cost U(int64_t micros) { return Cost::FromMicros(micros); }

const VirtualNodeModule& Find(const std::vector<VirtualNodeModule>& all, RouterType t, int slots) {
  for (const VirtualNodeModule& m : all) {
    if (m.type == t && m.slots == slots) return m;
  }
  throw std::runtime_error("module not found");
}

TEST(VirtualModules, Type1ThirtyFiveSlots) {
  const auto all = EnumerateVirtualModules();
  const VirtualNodeModule& m = Find(all, RouterType::kType1, 35);
  EXPECT_EQ(m.chassis, 3);
  EXPECT_EQ(m.cost, U(901'750'000));
  EXPECT_EQ(m.capacity_gbps, 4900);
}

TEST(VirtualModules, Type2FiveSlots) {
  const VirtualNodeModule& m = Find(EnumerateVirtualModules(), RouterType::kType2, 5);
  EXPECT_EQ(m.cost, U(92'000'000));
  EXPECT_EQ(m.capacity_gbps, 600);
}

TEST(VirtualModules, LargestReaches8960) {
  EXPECT_EQ(Find(EnumerateVirtualModules(), RouterType::kType1, 64).capacity_gbps, 8960);
}

TEST(VirtualModules, EnumerationMatchesPriceList) {
  const auto all = EnumerateVirtualModules();
  EXPECT_EQ(all.size(), 65u);
  std::map<std::pair<int, int>, int> seen;
  for (size_t k = 0; k < all.size(); ++k) {
    const VirtualNodeModule& m = all[k];
    ++seen[{static_cast<int>(m.type), m.slots}];
    if (k > 0) EXPECT_LE(all[k - 1].capacity_gbps, m.capacity_gbps);
    if (m.type == RouterType::kType1) {
      EXPECT_EQ(m.cost.micros(), oracle::Type1Micros(m.slots));
      EXPECT_EQ(m.capacity_gbps, 140 * m.slots);
      EXPECT_EQ(m.chassis, (m.slots + 15) / 16);
    } else {
      EXPECT_EQ(m.cost.micros(), oracle::Type2Micros(m.slots));
      EXPECT_EQ(m.capacity_gbps, 120 * m.slots);
    }
  }
  for (const auto& [key, count] : seen) EXPECT_EQ(count, 1);
}

TEST(VirtualModules, CostsIncreaseWithSlotsAndMultichassisOnce) {
  const auto all = EnumerateVirtualModules();
  for (int s = 12; s <= 64; ++s) {
    EXPECT_LT(Find(all, RouterType::kType1, s - 1).cost, Find(all, RouterType::kType1, s).cost);
  }
  for (int s = 2; s <= 11; ++s) {
    EXPECT_LT(Find(all, RouterType::kType2, s - 1).cost, Find(all, RouterType::kType2, s).cost);
  }
  // 16 -> 17 slots adds a chassis (27.25), the multichassis charge (50) and a slot (22).
  EXPECT_EQ(Find(all, RouterType::kType1, 17).cost - Find(all, RouterType::kType1, 16).cost,
            U(99'250'000));
  EXPECT_EQ(Find(all, RouterType::kType1, 18).cost - Find(all, RouterType::kType1, 17).cost,
            U(22'000'000));
}

TEST(LambdaType, DefaultPrices) {
  const LambdaType t10 = MakeLambdaType(10);
  EXPECT_EQ(t10.cost, U(3'000'000));
  EXPECT_EQ(t10.routing_gbps, 10);
  EXPECT_EQ(t10.switching_gbps, 10);
  EXPECT_DOUBLE_EQ(t10.slot_share(), 1.0 / 14);
  const LambdaType t100 = MakeLambdaType(100);
  EXPECT_EQ(t100.cost, U(16'000'000));
  EXPECT_EQ(t100.routing_gbps, 100);
  EXPECT_EQ(t100.switching_gbps, 120);
  EXPECT_DOUBLE_EQ(t100.slot_share(), 1.0);
  EXPECT_GE(t100.switching_gbps, t100.routing_gbps);
}

TEST(LambdaType, TransponderScaling) {
  EXPECT_EQ(MakeLambdaType(10, 20).cost, U(41'000'000));
  EXPECT_EQ(MakeLambdaType(100, 2.5).cost, U(40'000'000));
  EXPECT_THROW(MakeLambdaType(40), Error);
  EXPECT_THROW(MakeLambdaType(10, 0.5), Error);
}

TEST(FiberCost, WorkedLengths) {
  EXPECT_EQ(FiberLinkCost(160), U(3'072'000));
  EXPECT_EQ(FiberLinkCost(60), U(432'000));
  EXPECT_EQ(FiberLinkCost(400), U(10'560'000));
  const FiberHardware h = FiberLinkHardware(400);
  EXPECT_EQ(h.line_amplifiers, 4);
  EXPECT_EQ(h.gain_equalizers, 0);
  const FiberHardware far = FiberLinkHardware(720);
  EXPECT_EQ(far.line_amplifiers, 8);
  EXPECT_EQ(far.gain_equalizers, 1);
}

TEST(FiberCost, MatchesFormulaAndIsMonotone) {
  Cost prev = Cost::Zero();
  for (int km = 1; km <= 1200; ++km) {
    const Cost c = FiberLinkCost(km);
    EXPECT_EQ(c.micros(), oracle::FiberMicros(km)) << km;
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(PhysicalModules, TableValues) {
  const auto mods = PhysicalModules();
  ASSERT_EQ(mods.size(), 10u);
  EXPECT_EQ(mods[0].name, "ROADM50");
  EXPECT_EQ(mods[1].name, "ROADM100");
  EXPECT_EQ(mods[1].cost, U(17'500'000));
  EXPECT_EQ(mods[1].add_drop_ports, 80);
  EXPECT_EQ(mods[2].cost, U(27'490'000));
  EXPECT_EQ(mods[5].fibers, 6);
  EXPECT_EQ(mods[5].add_drop_ports, 240);
  EXPECT_EQ(mods[5].cost, U(56'690'000));
  EXPECT_EQ(mods[9].add_drop_ports, 400);
}

TEST(CostCatalog, BuildAndCsv) {
  const Instance inst = fixtures::TwoPop(10, 160, {10, 100});
  const CostCatalog c = CostCatalog::Build(inst);
  ASSERT_EQ(c.lambda_types().size(), 2u);
  EXPECT_EQ(c.lambda_types()[1].speed_gbps, 100);
  EXPECT_EQ(c.fiber_cost(0), U(3'072'000));
  std::ostringstream out;
  c.WriteCsv(inst.graph(), out);
  const std::string csv = out.str();
  EXPECT_EQ(csv.rfind("kind,name,capacity_gbps,slots,fibers,add_drop,cost\n", 0), 0u);
  EXPECT_NE(csv.find("router,Type1x3-35slot,4900,35,,,901.75\n"), std::string::npos);
  EXPECT_NE(csv.find("oxc,OXC6,,,6,240,56.69\n"), std::string::npos);
  EXPECT_NE(csv.find("fiber,ab,,,,,3.072"), std::string::npos);
}

}  // namespace
}  // namespace ipwdm
