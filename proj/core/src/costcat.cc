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

#include <algorithm>
#include <cmath>
#include <ostream>

namespace ipwdm {
namespace {

constexpr int64_t kMicro = Cost::kMicrosPerUnit;

// Router price list, in micro-units.
constexpr int64_t kType1Base = 27'250'000;
constexpr int64_t kMultichassis = 50'000'000;
constexpr int64_t kType1Slot = 22 * kMicro;
constexpr int kType1SlotsPerChassis = 16;
constexpr int kType1SlotGbps = 140;
constexpr int kType1MinSlots = 11;
constexpr int kType1MaxSlots = 64;
constexpr int64_t kType2Base = 12 * kMicro;
constexpr int64_t kType2Slot = 16 * kMicro;
constexpr int kType2SlotGbps = 120;
constexpr int kType2MaxSlots = 11;

// WDM price list, in micro-units.
constexpr int64_t kTransponder10G = 1 * kMicro;
constexpr int64_t kTransponder100G = 8 * kMicro;
constexpr int64_t kSrTransceiver10G = 500'000;
constexpr int64_t kLineAmplifier = 1'920'000;
constexpr int64_t kGainEqualizer = 2'170'000;
constexpr double kDcfPerKmMicros = 7'200.0;
constexpr double kAmplifierSpanKm = 80.0;
constexpr int kAmplifiersPerEqualizer = 4;

int64_t ScaledMicros(int64_t micros, double factor) {
  return static_cast<int64_t>(std::llround(static_cast<double>(micros) * factor));
}

}  // namespace

LambdaType MakeLambdaType(int speed_gbps, double transponder_scale) {
  if (!(transponder_scale >= 1.0)) throw Error("transponder scale must be >= 1");
  LambdaType t;
  t.speed_gbps = speed_gbps;
  if (speed_gbps == 10) {
    t.routing_gbps = 10;
    t.switching_gbps = 10;
    t.slot_share_fourteenths = 1;
    t.cost = Cost::FromMicros(2 * ScaledMicros(kTransponder10G, transponder_scale) +
                              2 * kSrTransceiver10G);
  } else if (speed_gbps == 100) {
    t.routing_gbps = 100;
    t.switching_gbps = 120;
    t.slot_share_fourteenths = kSlotFraction;
    t.cost = Cost::FromMicros(2 * ScaledMicros(kTransponder100G, transponder_scale));
  } else {
    throw Error("unknown circuit speed " + std::to_string(speed_gbps));
  }
  return t;
}

std::string VirtualNodeModule::Descriptor() const {
  std::string s = type == RouterType::kType1 ? "Type1" : "Type2";
  if (chassis > 1) s += "x" + std::to_string(chassis);
  return s + "-" + std::to_string(slots) + "slot";
}

std::vector<VirtualNodeModule> EnumerateVirtualModules() {
  std::vector<VirtualNodeModule> out;
  for (int slots = 1; slots <= kType2MaxSlots; ++slots) {
    out.push_back(VirtualNodeModule{RouterType::kType2, 1, slots, slots * kType2SlotGbps,
                                    Cost::FromMicros(kType2Base + slots * kType2Slot)});
  }
  for (int slots = kType1MinSlots; slots <= kType1MaxSlots; ++slots) {
    const int chassis = (slots + kType1SlotsPerChassis - 1) / kType1SlotsPerChassis;
    const int64_t micros = chassis * kType1Base +
                           (slots > kType1SlotsPerChassis ? kMultichassis : 0) +
                           slots * kType1Slot;
    out.push_back(VirtualNodeModule{RouterType::kType1, chassis, slots,
                                    slots * kType1SlotGbps, Cost::FromMicros(micros)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.capacity_gbps < b.capacity_gbps;
  });
  return out;
}

std::vector<PhysicalNodeModule> PhysicalModules() {
  std::vector<PhysicalNodeModule> out;
  out.push_back({"ROADM50", 2, 40, Cost::FromMicros(11'670'000)});
  out.push_back({"ROADM100", 2, 80, Cost::FromMicros(17'500'000)});
  for (int n = 3; n <= 5; ++n) {
    out.push_back({"OXC" + std::to_string(n), n, 40 * n,
                   Cost::FromMicros(2'500'000 + n * 8'330'000)});
  }
  for (int n = 6; n <= 10; ++n) {
    out.push_back({"OXC" + std::to_string(n), n, 40 * n,
                   Cost::FromMicros(2'750'000 + n * 8'990'000)});
  }
  return out;
}

FiberHardware FiberLinkHardware(double length_km) {
  if (!(length_km > 0)) throw Error("fiber length must be positive");
  FiberHardware h;
  const auto spans = static_cast<int>(std::ceil(length_km / kAmplifierSpanKm));
  h.line_amplifiers = std::max(0, spans - 1);
  h.gain_equalizers = std::max(
      0, (h.line_amplifiers + kAmplifiersPerEqualizer - 1) / kAmplifiersPerEqualizer - 1);
  h.cost = Cost::FromMicros(h.line_amplifiers * kLineAmplifier +
                            h.gain_equalizers * kGainEqualizer +
                            std::llround(kDcfPerKmMicros * length_km));
  return h;
}

CostCatalog CostCatalog::Build(const Instance& instance) {
  CostCatalog c;
  c.virtual_modules_ = EnumerateVirtualModules();
  c.physical_modules_ = PhysicalModules();
  for (int speed : instance.params().speeds_gbps) {
    c.lambda_types_.push_back(MakeLambdaType(speed, instance.params().transponder_scale));
  }
  for (const Edge& e : instance.graph().edges()) {
    c.fiber_cost_.push_back(FiberLinkCost(e.length_km));
  }
  return c;
}

void CostCatalog::WriteCsv(const PhysicalGraph& graph, std::ostream& out) const {
  out << "kind,name,capacity_gbps,slots,fibers,add_drop,cost\n";
  for (const LambdaType& t : lambda_types_) {
    out << "lambda," << t.speed_gbps << "G," << t.routing_gbps << ",,,,"
        << t.cost.ToString() << "\n";
  }
  for (const VirtualNodeModule& m : virtual_modules_) {
    out << "router," << m.Descriptor() << ',' << m.capacity_gbps << ',' << m.slots
        << ",,," << m.cost.ToString() << "\n";
  }
  for (const PhysicalNodeModule& m : physical_modules_) {
    out << "oxc," << m.name << ",,," << m.fibers << ',' << m.add_drop_ports << ','
        << m.cost.ToString() << "\n";
  }
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(fiber_cost_.size()); ++e) {
    out << "fiber," << graph.edge(e).name << ",,,,," << fiber_cost_[e].ToString()
        << "\n";
  }
}

}  // namespace ipwdm
