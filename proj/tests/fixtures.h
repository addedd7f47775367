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

#ifndef IPWDM_TESTS_FIXTURES_H_
#define IPWDM_TESTS_FIXTURES_H_

#include <random>
#include <string>

#include "ipwdm/netmodel.h"

namespace ipwdm::fixtures {

Instance FromText(const std::string& text);

// Two PoPs on one link.
Instance TwoPop(int64_t demand_gbps, double km = 100, std::vector<int> speeds = {10});

// a - b - c, every node a PoP, short links; demands a-c 20, a-b 10, b-c 10.
Instance Line();

// Hub h with 10 relays of 6 leaves each; every leaf sends 61 Gbps to the hub.
// B = 80 keeps every link on one fiber, so the transparent core needs 420
// add-drop ports at the hub.
Instance StarOverload(Architecture arch);

// 3..4 nodes, 2..3 demands, <= 2 paths per pair, 10G only.
Instance TinyRandom(std::mt19937_64& rng);

// 6..12 nodes, 3..7 PoPs, mixed speeds and both architectures.
Instance MidRandom(std::mt19937_64& rng);

}  // namespace ipwdm::fixtures

#endif  // IPWDM_TESTS_FIXTURES_H_
