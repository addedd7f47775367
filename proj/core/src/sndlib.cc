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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <sstream>

#include "ipwdm/instance_io.h"

namespace ipwdm {
namespace {

// Splits SNDlib text into tokens; parentheses are standalone tokens and
// everything after '#' or a leading '?' on a line is ignored.
std::vector<std::string> Tokenize(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '?') continue;
    line = line.substr(0, line.find('#'));
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    };
    for (char c : line) {
      if (c == '(' || c == ')') {
        flush();
        out.emplace_back(1, c);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        cur += c;
      }
    }
    flush();
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const {
    if (done()) throw Error("SNDlib: unexpected end of file");
    return tokens_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& t) {
    std::string got = next();
    if (got != t) throw Error("SNDlib: expected '" + t + "', got '" + got + "'");
  }
  double number() {
    std::string t = next();
    try {
      return std::stod(t);
    } catch (const std::exception&) {
      throw Error("SNDlib: expected a number, got '" + t + "'");
    }
  }
  // Skips a balanced parenthesised group; the opening '(' is next.
  void skip_group() {
    expect("(");
    int depth = 1;
    while (depth > 0) {
      std::string t = next();
      if (t == "(") ++depth;
      if (t == ")") --depth;
    }
  }

 private:
  std::vector<std::string> tokens_;
  size_t pos_ = 0;
};

}  // namespace

double GreatCircleKm(const GeoPoint& a, const GeoPoint& b) {
  constexpr double kEarthRadiusKm = 6371.0;
  constexpr double kDeg = 3.14159265358979323846 / 180.0;
  const double lat1 = a.latitude * kDeg;
  const double lat2 = b.latitude * kDeg;
  const double dlat = lat2 - lat1;
  const double dlon = (b.longitude - a.longitude) * kDeg;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

SndlibNetwork ReadSndlib(std::istream& in) {
  Cursor cur(Tokenize(in));
  SndlibNetwork net;
  bool saw_nodes = false;
  while (!cur.done()) {
    std::string section = cur.next();
    if (section == "NODES") {
      saw_nodes = true;
      cur.expect("(");
      while (cur.peek() != ")") {
        std::string name = cur.next();
        std::optional<GeoPoint> pos;
        if (cur.peek() == "(") {
          cur.next();
          double lon = cur.number();
          double lat = cur.number();
          cur.expect(")");
          pos = GeoPoint{lon, lat};
        }
        net.graph.AddNode(name, pos);
      }
      cur.expect(")");
    } else if (section == "LINKS") {
      if (!saw_nodes) throw Error("SNDlib: LINKS before NODES");
      cur.expect("(");
      while (cur.peek() != ")") {
        std::string id = cur.next();
        cur.expect("(");
        NodeIndex a = net.graph.NodeByName(cur.next());
        NodeIndex b = net.graph.NodeByName(cur.next());
        cur.expect(")");
        cur.number();  // pre-installed capacity
        cur.number();  // pre-installed capacity cost
        double routing_cost = cur.number();
        cur.number();  // setup cost
        if (cur.peek() == "(") cur.skip_group();  // capacity modules
        double length = routing_cost;
        if (!(length > 0)) {
          const auto& pa = net.graph.node(a).position;
          const auto& pb = net.graph.node(b).position;
          if (!pa || !pb) {
            throw Error("SNDlib: link " + id +
                        " has no routing cost and its nodes lack coordinates");
          }
          length = GreatCircleKm(*pa, *pb);
        }
        net.graph.AddEdge(id, a, b, length);
      }
      cur.expect(")");
    } else if (section == "DEMANDS") {
      if (!saw_nodes) throw Error("SNDlib: DEMANDS before NODES");
      cur.expect("(");
      while (cur.peek() != ")") {
        cur.next();  // demand id
        cur.expect("(");
        NodeIndex a = net.graph.NodeByName(cur.next());
        NodeIndex b = net.graph.NodeByName(cur.next());
        cur.expect(")");
        cur.number();  // routing unit
        double value = cur.number();
        cur.next();  // max path length or UNLIMITED
        net.demands.push_back(RawEntry{a, b, value});
      }
      cur.expect(")");
    } else if (cur.peek() == "(") {
      cur.skip_group();
    } else {
      throw Error("SNDlib: unexpected token '" + section + "'");
    }
  }
  if (!saw_nodes) throw Error("SNDlib: no NODES section");
  return net;
}

}  // namespace ipwdm
