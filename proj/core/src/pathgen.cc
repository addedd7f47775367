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

#include "ipwdm/pathgen.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iomanip>
#include <map>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <thread>

namespace ipwdm {
namespace {

constexpr double kLengthTolerance = 1e-9;

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= kLengthTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// Shortest distance from every node to `target`.
std::vector<double> DistancesTo(const PhysicalGraph& graph, NodeIndex target) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(graph.num_nodes(), kInf);
  using Item = std::pair<double, NodeIndex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[target] = 0;
  heap.emplace(0.0, target);
  while (!heap.empty()) {
    auto [d, n] = heap.top();
    heap.pop();
    if (d > dist[n]) continue;
    for (EdgeIndex e : graph.incident(n)) {
      const Edge& edge = graph.edge(e);
      NodeIndex m = edge.Other(n);
      double nd = d + edge.length_km;
      if (nd < dist[m]) {
        dist[m] = nd;
        heap.emplace(nd, m);
      }
    }
  }
  return dist;
}

// Depth-first enumeration of simple paths with distance-to-target pruning.
// Keeps the k best paths seen so far and prunes against the current k-th.
class BoundedEnumerator {
 public:
  BoundedEnumerator(const PhysicalGraph& graph, NodeIndex from, NodeIndex to,
                    int k, double max_km)
      : graph_(graph), from_(from), to_(to), k_(k), max_km_(max_km),
        dist_(DistancesTo(graph, to)), on_path_(graph.num_nodes(), false) {}

  std::vector<PhysPath> Run() {
    if (!(dist_[from_] <= max_km_ * (1 + kLengthTolerance))) return {};
    on_path_[from_] = true;
    nodes_.push_back(from_);
    Visit(from_, 0.0);
    return std::move(best_);
  }

 private:
  double Limit() const {
    double limit = max_km_;
    if (static_cast<int>(best_.size()) == k_) limit = std::min(limit, best_.back().length_km);
    return limit * (1 + kLengthTolerance) + kLengthTolerance;
  }

  void Visit(NodeIndex n, double length) {
    if (n == to_) {
      Record(length);
      return;
    }
    // Expand neighbours in order of optimistic total length.
    struct Step {
      double bound;
      EdgeIndex edge;
    };
    std::vector<Step> steps;
    for (EdgeIndex e : graph_.incident(n)) {
      NodeIndex m = graph_.edge(e).Other(n);
      if (on_path_[m]) continue;
      double bound = length + graph_.edge(e).length_km + dist_[m];
      if (bound > Limit()) continue;
      steps.push_back({bound, e});
    }
    std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
      return a.bound != b.bound ? a.bound < b.bound : a.edge < b.edge;
    });
    for (const Step& s : steps) {
      if (s.bound > Limit()) continue;
      NodeIndex m = graph_.edge(s.edge).Other(n);
      on_path_[m] = true;
      nodes_.push_back(m);
      edges_.push_back(s.edge);
      Visit(m, length + graph_.edge(s.edge).length_km);
      edges_.pop_back();
      nodes_.pop_back();
      on_path_[m] = false;
    }
  }

  void Record(double) {
    PhysPath p;
    p.from = from_;
    p.to = to_;
    p.edges = edges_;
    p.nodes = nodes_;
    for (EdgeIndex e : edges_) p.length_km += graph_.edge(e).length_km;
    if (p.length_km > max_km_ && !NearlyEqual(p.length_km, max_km_)) return;
    auto pos = std::upper_bound(best_.begin(), best_.end(), p, PathLess);
    if (static_cast<int>(best_.size()) == k_ && pos == best_.end()) return;
    best_.insert(pos, std::move(p));
    if (static_cast<int>(best_.size()) > k_) best_.pop_back();
  }

  const PhysicalGraph& graph_;
  NodeIndex from_, to_;
  int k_;
  double max_km_;
  std::vector<double> dist_;
  std::vector<bool> on_path_;
  std::vector<NodeIndex> nodes_;
  std::vector<EdgeIndex> edges_;
  std::vector<PhysPath> best_;
};

}  // namespace

bool PhysPath::Contains(NodeIndex n) const {
  return std::find(nodes.begin(), nodes.end(), n) != nodes.end();
}

bool PathLess(const PhysPath& a, const PhysPath& b) {
  if (!NearlyEqual(a.length_km, b.length_km)) return a.length_km < b.length_km;
  return a.edges < b.edges;
}

std::vector<PhysPath> KShortestBounded(const PhysicalGraph& graph, NodeIndex i,
                                       NodeIndex j, int k, double max_km) {
  if (i < 0 || j < 0 || i >= graph.num_nodes() || j >= graph.num_nodes()) {
    throw Error("path endpoints must be graph nodes");
  }
  if (i == j) throw Error("path endpoints must differ");
  if (k < 1) return {};
  return BoundedEnumerator(graph, i, j, k, max_km).Run();
}

PathCatalog PathCatalog::Build(const Instance& instance) {
  const auto& pops = instance.pops();
  std::vector<PopPair> pairs;
  for (size_t a = 0; a < pops.size(); ++a) {
    for (size_t b = a + 1; b < pops.size(); ++b) pairs.emplace_back(pops[a], pops[b]);
  }
  std::vector<std::vector<PhysPath>> per_pair(pairs.size());
  const ScenarioParams& params = instance.params();

  // Pairs are independent; results land at fixed indexes so the catalog does
  // not depend on scheduling.
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(pairs.size() / 8 + 1)));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t q = w; q < pairs.size(); q += workers) {
        per_pair[q] = KShortestBounded(instance.graph(), pairs[q].first,
                                       pairs[q].second, params.max_paths_per_pair,
                                       params.max_path_km);
      }
    });
  }
  pool.clear();
  return Assemble(instance.graph().num_nodes(), instance.graph().num_edges(),
                  std::move(pairs), std::move(per_pair));
}

PathCatalog PathCatalog::Assemble(int num_nodes, int num_edges,
                                  std::vector<PopPair> pairs,
                                  std::vector<std::vector<PhysPath>> per_pair) {
  PathCatalog c;
  c.num_nodes_ = num_nodes;
  c.pairs_ = std::move(pairs);
  c.by_pair_.resize(c.pairs_.size());
  c.ending_at_.resize(num_nodes);
  c.through_.resize(num_nodes);
  c.using_edge_.resize(num_edges);
  for (size_t q = 0; q < per_pair.size(); ++q) {
    for (PhysPath& p : per_pair[q]) {
      const auto id = static_cast<PathIndex>(c.paths_.size());
      c.by_pair_[q].push_back(id);
      c.pair_of_path_.push_back(static_cast<int>(q));
      c.ending_at_[p.from].push_back(id);
      c.ending_at_[p.to].push_back(id);
      for (NodeIndex n : p.nodes) c.through_[n].push_back(id);
      for (EdgeIndex e : p.edges) c.using_edge_[e].push_back(id);
      c.paths_.push_back(std::move(p));
    }
  }
  return c;
}

PathCatalog PathCatalog::ShortestOnly() const {
  std::vector<std::vector<PhysPath>> per_pair(pairs_.size());
  for (size_t q = 0; q < pairs_.size(); ++q) {
    if (!by_pair_[q].empty()) per_pair[q].push_back(paths_[by_pair_[q].front()]);
  }
  return Assemble(num_nodes_, static_cast<int>(using_edge_.size()), pairs_,
                  std::move(per_pair));
}

int PathCatalog::PairId(NodeIndex i, NodeIndex j) const {
  auto key = std::minmax(i, j);
  PopPair want{key.first, key.second};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), want);
  if (it == pairs_.end() || *it != want) return -1;
  return static_cast<int>(it - pairs_.begin());
}

std::span<const PathIndex> PathCatalog::PairPaths(NodeIndex i, NodeIndex j) const {
  int q = PairId(i, j);
  if (q < 0) return {};
  return by_pair_[q];
}

std::vector<int> PathCatalog::EmptyPairs() const {
  std::vector<int> out;
  for (size_t q = 0; q < by_pair_.size(); ++q) {
    if (by_pair_[q].empty()) out.push_back(static_cast<int>(q));
  }
  return out;
}

void PathCatalog::Write(const PhysicalGraph& graph, std::ostream& out) const {
  out << "catalog " << paths_.size() << "\n" << std::setprecision(17);
  for (const PhysPath& p : paths_) {
    out << "path " << graph.node(p.from).name << ' ' << graph.node(p.to).name << ' '
        << p.length_km;
    for (EdgeIndex e : p.edges) out << ' ' << graph.edge(e).name;
    out << "\n";
  }
}

PathCatalog PathCatalog::Read(const Instance& instance, std::istream& in) {
  const PhysicalGraph& graph = instance.graph();
  std::map<std::string, EdgeIndex, std::less<>> edge_by_name;
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e) edge_by_name[graph.edge(e).name] = e;

  const auto& pops = instance.pops();
  std::vector<PopPair> pairs;
  for (size_t a = 0; a < pops.size(); ++a) {
    for (size_t b = a + 1; b < pops.size(); ++b) pairs.emplace_back(pops[a], pops[b]);
  }
  std::vector<std::vector<PhysPath>> per_pair(pairs.size());

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line.substr(0, line.find('#')));
    std::string key;
    if (!(ss >> key) || key == "catalog") continue;
    if (key != "path") throw Error("catalog line " + std::to_string(line_no) + ": expected 'path'");
    std::string a, b;
    double stated_length = 0;
    if (!(ss >> a >> b >> stated_length)) {
      throw Error("catalog line " + std::to_string(line_no) + ": malformed path");
    }
    PhysPath p;
    p.from = graph.NodeByName(a);
    p.to = graph.NodeByName(b);
    p.nodes.push_back(p.from);
    NodeIndex at = p.from;
    for (std::string en; ss >> en;) {
      auto it = edge_by_name.find(en);
      if (it == edge_by_name.end()) throw Error("catalog: unknown edge '" + en + "'");
      const Edge& e = graph.edge(it->second);
      if (e.a != at && e.b != at) {
        throw Error("catalog line " + std::to_string(line_no) + ": edges do not form a path");
      }
      at = e.Other(at);
      if (p.Contains(at)) throw Error("catalog line " + std::to_string(line_no) + ": path is not simple");
      p.nodes.push_back(at);
      p.edges.push_back(it->second);
      p.length_km += e.length_km;
    }
    if (at != p.to || p.edges.empty()) {
      throw Error("catalog line " + std::to_string(line_no) + ": path does not end at " + b);
    }
    if (p.from > p.to) throw Error("catalog paths must be oriented from the lower node index");
    auto it = std::lower_bound(pairs.begin(), pairs.end(), PopPair{p.from, p.to});
    if (it == pairs.end() || *it != PopPair{p.from, p.to}) {
      throw Error("catalog path endpoints must both be PoPs");
    }
    auto& list = per_pair[it - pairs.begin()];
    if (!list.empty() && !PathLess(list.back(), p)) {
      throw Error("catalog paths within a pair must be in ascending order");
    }
    list.push_back(std::move(p));
  }
  return Assemble(graph.num_nodes(), graph.num_edges(), std::move(pairs),
                  std::move(per_pair));
}

}  // namespace ipwdm
