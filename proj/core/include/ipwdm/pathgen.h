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

#ifndef IPWDM_PATHGEN_H_
#define IPWDM_PATHGEN_H_

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ipwdm/netmodel.h"

namespace ipwdm {

using PathIndex = int32_t;

// A simple path in the fiber graph, oriented from `from` to `to`.
struct PhysPath {
  NodeIndex from = kNoNode;
  NodeIndex to = kNoNode;
  std::vector<EdgeIndex> edges;
  // from, interior nodes..., to
  std::vector<NodeIndex> nodes;
  double length_km = 0;

  bool Contains(NodeIndex n) const;
};

// Orders paths by length, then lexicographically by edge-index sequence.
bool PathLess(const PhysPath& a, const PhysPath& b);

// Up to k simple i-j paths of length <= max_km in ascending PathLess order.
// Returns an empty list when no bounded path exists; throws on unknown nodes
// or i == j.
std::vector<PhysPath> KShortestBounded(const PhysicalGraph& graph, NodeIndex i,
                                       NodeIndex j, int k, double max_km);

// Pair of PoPs with first < second.
using PopPair = std::pair<NodeIndex, NodeIndex>;

// The admissible light-path routes P: for every unordered PoP pair the
// bounded k-shortest paths, plus incidence indexes.
class PathCatalog {
 public:
  PathCatalog() = default;

  static PathCatalog Build(const Instance& instance);
  // Catalog over the same pairs with only the first (shortest) path kept.
  PathCatalog ShortestOnly() const;

  int num_paths() const { return static_cast<int>(paths_.size()); }
  const PhysPath& path(PathIndex p) const { return paths_.at(p); }
  std::span<const PhysPath> paths() const { return paths_; }

  // All unordered PoP pairs, ascending.
  std::span<const PopPair> pairs() const { return pairs_; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }
  // Index into pairs() or -1.
  int PairId(NodeIndex i, NodeIndex j) const;
  int PairOf(PathIndex p) const { return pair_of_path_.at(p); }
  std::span<const PathIndex> PairPaths(int pair_id) const {
    return by_pair_.at(pair_id);
  }
  std::span<const PathIndex> PairPaths(NodeIndex i, NodeIndex j) const;
  // Pair ids with no admissible path.
  std::vector<int> EmptyPairs() const;

  // delta_P(n): paths with an end node at n.
  std::span<const PathIndex> EndingAt(NodeIndex n) const { return ending_at_.at(n); }
  // Paths visiting n, end nodes included.
  std::span<const PathIndex> Through(NodeIndex n) const { return through_.at(n); }
  std::span<const PathIndex> UsingEdge(EdgeIndex e) const { return using_edge_.at(e); }

  // Text dump: one "path <pair-from> <pair-to> <length_km> <edge>..." line per
  // path using node and edge names, preceded by a "catalog" header line.
  void Write(const PhysicalGraph& graph, std::ostream& out) const;
  static PathCatalog Read(const Instance& instance, std::istream& in);

 private:
  static PathCatalog Assemble(int num_nodes, int num_edges,
                              std::vector<PopPair> pairs,
                              std::vector<std::vector<PhysPath>> per_pair);

  std::vector<PhysPath> paths_;
  std::vector<PopPair> pairs_;
  std::vector<std::vector<PathIndex>> by_pair_;
  std::vector<int> pair_of_path_;
  std::vector<std::vector<PathIndex>> ending_at_;
  std::vector<std::vector<PathIndex>> through_;
  std::vector<std::vector<PathIndex>> using_edge_;
  int num_nodes_ = 0;
};

}  // namespace ipwdm

#endif  // IPWDM_PATHGEN_H_
