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

#ifndef IPWDM_COSTCAT_H_
#define IPWDM_COSTCAT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ipwdm/cost.h"
#include "ipwdm/netmodel.h"

namespace ipwdm {

// Slot consumption is kept in fourteenths of a slot so that the 10G share
// (1/14 slot) stays integral.
inline constexpr int kSlotFraction = 14;

struct LambdaType {
  int speed_gbps = 10;
  // Capacity offered to IP flow (A).
  int routing_gbps = 10;
  // Router switching capacity consumed at each end (A').
  int switching_gbps = 10;
  // Slots consumed at each end, in 1/kSlotFraction units (s * 14).
  int slot_share_fourteenths = 1;
  // Cost per installed light path (alpha).
  Cost cost;

  double slot_share() const {
    return static_cast<double>(slot_share_fourteenths) / kSlotFraction;
  }
};

// Light-path module for a circuit speed. transponder_scale multiplies the
// transponder unit price (1.0 for 10G, 8.0 for 100G); the two 10G SR
// transceivers are not scaled.
LambdaType MakeLambdaType(int speed_gbps, double transponder_scale = 1.0);

enum class RouterType { kType1, kType2 };

// A preconfigured IP router (virtual node module).
struct VirtualNodeModule {
  RouterType type = RouterType::kType2;
  int chassis = 1;
  int slots = 1;
  // Switching capacity C^n in Gbps.
  int capacity_gbps = 0;
  Cost cost;

  std::string Descriptor() const;
};

// Type2 with 1..11 slots and Type1 with 11..64 slots, ascending by capacity.
std::vector<VirtualNodeModule> EnumerateVirtualModules();

// An optical cross-connect or ROADM (physical node module).
struct PhysicalNodeModule {
  std::string name;
  int fibers = 0;
  int add_drop_ports = 0;
  Cost cost;
};

// ROADM 50%, ROADM 100%, OXC with 3..10 fiber degrees.
std::vector<PhysicalNodeModule> PhysicalModules();

struct FiberHardware {
  int line_amplifiers = 0;
  int gain_equalizers = 0;
  Cost cost;
};

// Amplifier, equalizer and dispersion-compensation cost of one fiber over a
// link of the given length. Negative counts for short links clamp to zero.
FiberHardware FiberLinkHardware(double length_km);
inline Cost FiberLinkCost(double length_km) { return FiberLinkHardware(length_km).cost; }

// Everything the model needs to price an instance.
class CostCatalog {
 public:
  static CostCatalog Build(const Instance& instance);

  std::span<const VirtualNodeModule> virtual_modules() const { return virtual_modules_; }
  std::span<const PhysicalNodeModule> physical_modules() const { return physical_modules_; }
  // One per admissible speed, ascending.
  std::span<const LambdaType> lambda_types() const { return lambda_types_; }
  Cost fiber_cost(EdgeIndex e) const { return fiber_cost_.at(e); }
  std::span<const Cost> fiber_costs() const { return fiber_cost_; }

  // CSV dump with columns kind,name,capacity_gbps,slots,fibers,add_drop,cost.
  void WriteCsv(const PhysicalGraph& graph, std::ostream& out) const;

 private:
  std::vector<VirtualNodeModule> virtual_modules_;
  std::vector<PhysicalNodeModule> physical_modules_;
  std::vector<LambdaType> lambda_types_;
  std::vector<Cost> fiber_cost_;
};

}  // namespace ipwdm

#endif  // IPWDM_COSTCAT_H_
