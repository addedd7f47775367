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

#ifndef IPWDM_INSTANCE_IO_H_
#define IPWDM_INSTANCE_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipwdm/netmodel.h"

namespace ipwdm {

// Line-oriented instance format. One directive per line, '#' starts a
// comment:
//
//   channels <B>                      fiber channel count (default 40)
//   max_path_km <km>                  optical reach (default 750)
//   max_paths <K>                     paths per PoP pair (default 50)
//   speeds <10|100> [...]             admissible circuit speeds
//   transponder_scale <factor>        default 1
//   architecture optimized|transparent
//   node <name> [<longitude> <latitude>]
//   pop <name> [<name> ...]
//   link <name> <node-a> <node-b> <km>
//   demand <node-a> <node-b> <gbps>
//
// Nodes must be declared before links, PoPs and demands that use them.
Instance ReadInstanceText(std::istream& in);
void WriteInstanceText(const Instance& instance, std::ostream& out);

// SNDlib native network file contents.
struct SndlibNetwork {
  PhysicalGraph graph;
  std::vector<RawEntry> demands;
};

// Reads the NODES, LINKS and DEMANDS sections of an SNDlib native file;
// META and ADMISSIBLE_PATHS are skipped. A link's length is its routing-cost
// field when positive, otherwise the great-circle distance between its end
// node coordinates.
SndlibNetwork ReadSndlib(std::istream& in);

double GreatCircleKm(const GeoPoint& a, const GeoPoint& b);

struct LoadOptions {
  // PoP names; empty means "every node that terminates an SNDlib demand".
  std::vector<std::string> pops;
  // SNDlib demands touching a non-PoP are dropped instead of rejected.
  bool drop_foreign_demands = false;
  ScenarioParams params;
};

// Loads either format, detected by content. Directives inside a text
// instance override options.params.
Instance LoadInstanceFile(const std::string& path, const LoadOptions& options);

}  // namespace ipwdm

#endif  // IPWDM_INSTANCE_IO_H_
