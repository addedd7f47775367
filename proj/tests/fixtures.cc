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

#include "fixtures.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "ipwdm/instance_io.h"
#include "oracle.h"

namespace ipwdm::fixtures {

Instance FromText(const std::string& text) {
  std::istringstream in(text);
  return ReadInstanceText(in);
}

Instance TwoPop(int64_t demand_gbps, double km, std::vector<int> speeds) {
  PhysicalGraph g;
  const NodeIndex a = g.AddNode("a");
  const NodeIndex b = g.AddNode("b");
  g.AddEdge("ab", a, b, km);
  ScenarioParams p;
  p.speeds_gbps = std::move(speeds);
  std::vector<Demand> d;
  if (demand_gbps > 0) d.push_back({a, b, demand_gbps});
  return Instance(std::move(g), {a, b}, std::move(d), p);
}

Instance Line() {
  return FromText(
      "node a\nnode b\nnode c\npop a b c\n"
      "link ab a b 60\nlink bc b c 60\n"
      "demand a c 20\ndemand a b 10\ndemand b c 10\n");
}

Instance StarOverload(Architecture arch) {
  PhysicalGraph g;
  const NodeIndex hub = g.AddNode("h");
  std::vector<NodeIndex> pops = {hub};
  std::vector<Demand> demands;
  for (int r = 0; r < 10; ++r) {
    const NodeIndex relay = g.AddNode("r" + std::to_string(r));
    g.AddEdge("h-r" + std::to_string(r), hub, relay, 100);
    for (int l = 0; l < 6; ++l) {
      const std::string name = "l" + std::to_string(r) + "_" + std::to_string(l);
      const NodeIndex leaf = g.AddNode(name);
      g.AddEdge("r-" + name, relay, leaf, 100);
      pops.push_back(leaf);
      demands.push_back({leaf, hub, 61});
    }
  }
  ScenarioParams p;
  p.channels_per_fiber = 80;
  p.max_paths_per_pair = 1;
  p.architecture = arch;
  return Instance(std::move(g), std::move(pops), std::move(demands), p);
}

namespace {

std::vector<NodeIndex> PickPops(std::mt19937_64& rng, int nodes, int count) {
  std::vector<NodeIndex> all(nodes);
  for (int n = 0; n < nodes; ++n) all[n] = n;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Demand> PickDemands(std::mt19937_64& rng, const std::vector<NodeIndex>& pops,
                                int count, int max_gbps) {
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (size_t a = 0; a < pops.size(); ++a) {
    for (size_t b = a + 1; b < pops.size(); ++b) pairs.emplace_back(pops[a], pops[b]);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<int> gbps(1, max_gbps);
  std::vector<Demand> d;
  for (int k = 0; k < count && k < static_cast<int>(pairs.size()); ++k) {
    d.push_back({pairs[k].first, pairs[k].second, gbps(rng)});
  }
  return d;
}

}  // namespace

Instance TinyRandom(std::mt19937_64& rng) {
  const int nodes = std::uniform_int_distribution<int>(3, 4)(rng);
  const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  PhysicalGraph g = oracle::RandomGraph(rng, nodes, extra, 40, 260);
  const int npops = std::uniform_int_distribution<int>(2, nodes)(rng);
  const std::vector<NodeIndex> pops = PickPops(rng, nodes, npops);
  const int ndem = std::uniform_int_distribution<int>(2, 3)(rng);
  // Four PoPs give six pairs; smaller volumes keep the enumeration short.
  const std::vector<Demand> d = PickDemands(rng, pops, ndem, npops == 4 ? 12 : 30);
  ScenarioParams p;
  p.max_paths_per_pair = 2;
  const int channels[] = {1, 2, 3, 40};
  p.channels_per_fiber = channels[std::uniform_int_distribution<int>(0, 3)(rng)];
  return Instance(std::move(g), pops, d, p);
}

Instance MidRandom(std::mt19937_64& rng) {
  const int nodes = std::uniform_int_distribution<int>(6, 12)(rng);
  const int extra = std::uniform_int_distribution<int>(2, nodes)(rng);
  PhysicalGraph g = oracle::RandomGraph(rng, nodes, extra, 50, 300);
  const int npops = std::uniform_int_distribution<int>(3, std::min(7, nodes))(rng);
  const std::vector<NodeIndex> pops = PickPops(rng, nodes, npops);
  const int ndem = std::uniform_int_distribution<int>(2, npops * (npops - 1) / 2)(rng);
  const std::vector<Demand> d = PickDemands(rng, pops, ndem, 180);
  ScenarioParams p;
  const std::vector<std::vector<int>> speeds = {{10}, {100}, {10, 100}};
  p.speeds_gbps = speeds[std::uniform_int_distribution<int>(0, 2)(rng)];
  p.max_paths_per_pair = std::uniform_int_distribution<int>(1, 4)(rng);
  p.channels_per_fiber = std::uniform_int_distribution<int>(8, 40)(rng);
  p.architecture = std::bernoulli_distribution(0.3)(rng) ? Architecture::kTransparentCore
                                                         : Architecture::kOptimized;
  return Instance(std::move(g), pops, d, p);
}

}  // namespace ipwdm::fixtures
