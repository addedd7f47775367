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

#include "ipwdm/instance_io.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace ipwdm {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

double ParseDouble(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("line " + std::to_string(line_no) + ": expected a number, got '" +
                s + "'");
  }
}

int64_t ParseInt(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("line " + std::to_string(line_no) +
                ": expected an integer, got '" + s + "'");
  }
}

struct TextInstance {
  PhysicalGraph graph;
  std::vector<NodeIndex> pops;
  std::vector<Demand> demands;
  ScenarioParams params;
};

TextInstance ParseText(std::istream& in, ScenarioParams defaults) {
  TextInstance t;
  t.params = std::move(defaults);
  std::string line;
  int line_no = 0;
  auto need = [&](const std::vector<std::string>& tok, size_t lo, size_t hi) {
    if (tok.size() < lo || tok.size() > hi) {
      throw Error("line " + std::to_string(line_no) + ": wrong number of fields for '" +
                  tok[0] + "'");
    }
  };
  auto node = [&](const std::string& name) {
    auto n = t.graph.FindNode(name);
    if (!n) {
      throw Error("line " + std::to_string(line_no) + ": unknown node '" + name + "'");
    }
    return *n;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = Tokens(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "channels") {
      need(tok, 2, 2);
      t.params.channels_per_fiber = static_cast<int>(ParseInt(tok[1], line_no));
    } else if (key == "max_path_km") {
      need(tok, 2, 2);
      t.params.max_path_km = ParseDouble(tok[1], line_no);
    } else if (key == "max_paths") {
      need(tok, 2, 2);
      t.params.max_paths_per_pair = static_cast<int>(ParseInt(tok[1], line_no));
    } else if (key == "speeds") {
      need(tok, 2, 3);
      t.params.speeds_gbps.clear();
      for (size_t i = 1; i < tok.size(); ++i) {
        t.params.speeds_gbps.push_back(static_cast<int>(ParseInt(tok[i], line_no)));
      }
    } else if (key == "transponder_scale") {
      need(tok, 2, 2);
      t.params.transponder_scale = ParseDouble(tok[1], line_no);
    } else if (key == "architecture") {
      need(tok, 2, 2);
      t.params.architecture = ParseArchitecture(tok[1]);
    } else if (key == "node") {
      if (tok.size() != 2 && tok.size() != 4) need(tok, 2, 2);
      std::optional<GeoPoint> pos;
      if (tok.size() == 4) {
        pos = GeoPoint{ParseDouble(tok[2], line_no), ParseDouble(tok[3], line_no)};
      }
      t.graph.AddNode(tok[1], pos);
    } else if (key == "pop") {
      need(tok, 2, SIZE_MAX);
      for (size_t i = 1; i < tok.size(); ++i) t.pops.push_back(node(tok[i]));
    } else if (key == "link") {
      need(tok, 5, 5);
      t.graph.AddEdge(tok[1], node(tok[2]), node(tok[3]),
                      ParseDouble(tok[4], line_no));
    } else if (key == "demand") {
      need(tok, 4, 4);
      t.demands.push_back(
          Demand{node(tok[1]), node(tok[2]), ParseInt(tok[3], line_no)});
    } else {
      throw Error("line " + std::to_string(line_no) + ": unknown directive '" + key +
                  "'");
    }
  }
  return t;
}

}  // namespace

Instance ReadInstanceText(std::istream& in) {
  TextInstance t = ParseText(in, ScenarioParams{});
  return Instance(std::move(t.graph), std::move(t.pops), std::move(t.demands),
                  std::move(t.params));
}

void WriteInstanceText(const Instance& instance, std::ostream& out) {
  const PhysicalGraph& g = instance.graph();
  const ScenarioParams& p = instance.params();
  out << std::setprecision(17);
  out << "channels " << p.channels_per_fiber << "\n";
  out << "max_path_km " << p.max_path_km << "\n";
  out << "max_paths " << p.max_paths_per_pair << "\n";
  out << "speeds";
  for (int s : p.speeds_gbps) out << ' ' << s;
  out << "\n";
  out << "transponder_scale " << p.transponder_scale << "\n";
  out << "architecture " << ArchitectureName(p.architecture) << "\n";
  for (const Node& n : g.nodes()) {
    out << "node " << n.name;
    if (n.position) out << ' ' << n.position->longitude << ' ' << n.position->latitude;
    out << "\n";
  }
  if (!instance.pops().empty()) {
    out << "pop";
    for (NodeIndex n : instance.pops()) out << ' ' << g.node(n).name;
    out << "\n";
  }
  for (const Edge& e : g.edges()) {
    out << "link " << e.name << ' ' << g.node(e.a).name << ' ' << g.node(e.b).name
        << ' ' << e.length_km << "\n";
  }
  for (const Demand& d : instance.demands()) {
    out << "demand " << g.node(d.source).name << ' ' << g.node(d.target).name << ' '
        << d.gbps << "\n";
  }
}

Instance LoadInstanceFile(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  if (content.find("NODES (") != std::string::npos ||
      content.find("SNDlib") != std::string::npos) {
    std::istringstream ss(content);
    SndlibNetwork net = ReadSndlib(ss);
    std::vector<NodeIndex> pops;
    if (options.pops.empty()) {
      std::vector<bool> seen(net.graph.num_nodes(), false);
      for (const RawEntry& r : net.demands) seen[r.a] = seen[r.b] = true;
      for (NodeIndex n = 0; n < net.graph.num_nodes(); ++n) {
        if (seen[n]) pops.push_back(n);
      }
    } else {
      for (const std::string& name : options.pops) {
        pops.push_back(net.graph.NodeByName(name));
      }
    }
    std::vector<bool> is_pop(net.graph.num_nodes(), false);
    for (NodeIndex n : pops) is_pop[n] = true;
    std::vector<Demand> demands;
    for (const RawEntry& r : net.demands) {
      if (!is_pop[r.a] || !is_pop[r.b]) {
        if (options.drop_foreign_demands) continue;
        throw Error("SNDlib demand " + net.graph.node(r.a).name + "-" +
                    net.graph.node(r.b).name + " touches a non-PoP node");
      }
      if (r.value <= 0) continue;
      // SNDlib values may be fractional; round up to whole Gbps.
      demands.push_back(
          Demand{r.a, r.b, static_cast<int64_t>(std::ceil(r.value - 1e-9))});
    }
    return Instance(std::move(net.graph), std::move(pops), std::move(demands),
                    options.params);
  }

  std::istringstream ss(content);
  TextInstance t = ParseText(ss, options.params);
  if (t.pops.empty()) {
    for (const std::string& name : options.pops) {
      t.pops.push_back(t.graph.NodeByName(name));
    }
  }
  return Instance(std::move(t.graph), std::move(t.pops), std::move(t.demands),
                  std::move(t.params));
}

}  // namespace ipwdm
