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

#include "ipwdm/scenario.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "ipwdm/costcat.h"
#include "ipwdm/instance_io.h"
#include "ipwdm/milp.h"
#include "ipwdm/pathgen.h"

namespace ipwdm {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string Shortest(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// Six decimals with trailing zeros removed.
std::string Decimal(double x) {
  std::string s = Fixed(x, 6);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

std::string ScenarioName::Render() const {
  std::string s;
  for (size_t k = 0; k < speeds_gbps.size(); ++k) {
    if (k > 0) s += '+';
    s += std::to_string(speeds_gbps[k]) + "G";
  }
  s += "-" + matrix + "-";
  if (volume_gbps == 0) {
    s += "raw";
  } else if (volume_gbps % 1000 == 0) {
    s += std::to_string(volume_gbps / 1000) + "T";
  } else {
    s += std::to_string(volume_gbps) + "G";
  }
  if (transponder_scale != 1.0) s += "-x" + Shortest(transponder_scale);
  if (architecture == Architecture::kTransparentCore) s += "-TC";
  return s;
}

ScenarioName ScenarioName::Parse(std::string_view text) {
  const auto bad = [&] { return Error("malformed scenario name '" + std::string(text) + "'"); };
  const std::vector<std::string> tok = Split(text, '-');
  if (tok.size() < 3) throw bad();
  ScenarioName n;
  n.speeds_gbps.clear();
  for (const std::string& sp : Split(tok[0], '+')) {
    int v = 0;
    if (sp.size() < 2 || sp.back() != 'G' || !ParseNumber(std::string_view(sp).substr(0, sp.size() - 1), v)) {
      throw bad();
    }
    n.speeds_gbps.push_back(v);
  }
  if (tok[1].empty()) throw bad();
  n.matrix = tok[1];
  const std::string& vol = tok[2];
  if (vol == "raw") {
    n.volume_gbps = 0;
  } else {
    if (vol.size() < 2) throw bad();
    int64_t v = 0;
    if (!ParseNumber(std::string_view(vol).substr(0, vol.size() - 1), v) || v <= 0) throw bad();
    if (vol.back() == 'T') {
      n.volume_gbps = v * 1000;
    } else if (vol.back() == 'G') {
      n.volume_gbps = v;
    } else {
      throw bad();
    }
  }
  for (size_t k = 3; k < tok.size(); ++k) {
    if (tok[k] == "TC" && k + 1 == tok.size()) {
      n.architecture = Architecture::kTransparentCore;
    } else if (tok[k].size() > 1 && tok[k][0] == 'x' &&
               n.architecture == Architecture::kOptimized && k == 3) {
      if (!ParseNumber(std::string_view(tok[k]).substr(1), n.transponder_scale)) throw bad();
    } else {
      throw bad();
    }
  }
  return n;
}

std::string_view SolverChoiceName(SolverChoice s) {
  switch (s) {
    case SolverChoice::kExact: return "exact";
    case SolverChoice::kHeuristic: return "heuristic";
    case SolverChoice::kExportOnly: return "export";
  }
  return "?";
}

SolverChoice ParseSolverChoice(std::string_view text) {
  if (text == "exact") return SolverChoice::kExact;
  if (text == "heuristic") return SolverChoice::kHeuristic;
  if (text == "export" || text == "export-only") return SolverChoice::kExportOnly;
  throw ConfigError("unknown solver '" + std::string(text) + "'");
}

ScenarioConfig ParseScenarioConfig(std::string_view json_text, const std::string& base_dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  const auto resolve = [&](const std::string& p) {
    if (p.empty() || fs::path(p).is_absolute()) return p;
    return (fs::path(base_dir) / p).lexically_normal().string();
  };
  static const std::vector<std::string> kKeys = {
      "instance", "pops", "drop_foreign_demands", "params", "matrices", "volumes_gbps",
      "speeds", "architectures", "transponder_scales", "solver", "seeds", "limits", "output"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(kKeys.begin(), kKeys.end(), it.key()) == kKeys.end()) {
      throw ConfigError("unknown config key '" + it.key() + "'");
    }
  }
  ScenarioConfig c;
  try {
    if (j.contains("instance")) c.instance_path = resolve(j["instance"].get<std::string>());
    if (j.contains("pops")) c.pops = j["pops"].get<std::vector<std::string>>();
    if (j.contains("drop_foreign_demands")) c.drop_foreign_demands = j["drop_foreign_demands"];
    if (j.contains("params")) {
      const auto& p = j["params"];
      if (p.contains("channels")) c.channels = p["channels"].get<int>();
      if (p.contains("max_path_km")) c.max_path_km = p["max_path_km"].get<double>();
      if (p.contains("max_paths")) c.max_paths = p["max_paths"].get<int>();
    }
    if (j.contains("matrices")) {
      c.matrices.clear();
      for (const auto& m : j["matrices"]) {
        MatrixSource s;
        s.label = m.value("label", std::string("M"));
        const std::string source = m.value("source", std::string("instance"));
        if (source == "instance") {
          s.kind = MatrixKind::kInstance;
        } else if (source == "file") {
          s.kind = MatrixKind::kFile;
          s.path = resolve(m.at("path").get<std::string>());
        } else if (source == "synthetic") {
          s.kind = MatrixKind::kSynthetic;
          const std::string mode = m.value("mode", std::string("decentralized"));
          if (mode == "centralized") {
            s.mode = MatrixMode::kCentralized;
            s.hub = m.at("hub").get<std::string>();
            s.hub_factor = m.value("hub_factor", 1.0);
          } else if (mode != "decentralized") {
            throw ConfigError("unknown matrix mode '" + mode + "'");
          }
          if (m.contains("weights")) s.weights = m["weights"].get<std::map<std::string, double>>();
        } else {
          throw ConfigError("unknown matrix source '" + source + "'");
        }
        if (s.label.empty() || s.label.find_first_of("-+ \t/") != std::string::npos) {
          throw ConfigError("matrix label '" + s.label + "' must be non-empty without '-', '+', '/' or spaces");
        }
        c.matrices.push_back(std::move(s));
      }
      if (c.matrices.empty()) throw ConfigError("matrices must not be empty");
    }
    if (j.contains("volumes_gbps")) c.volumes_gbps = j["volumes_gbps"].get<std::vector<int64_t>>();
    for (int64_t v : c.volumes_gbps) {
      if (v <= 0) throw ConfigError("volumes must be positive");
    }
    if (j.contains("speeds")) c.speeds = j["speeds"].get<std::vector<std::vector<int>>>();
    if (j.contains("architectures")) {
      c.architectures.clear();
      for (const auto& a : j["architectures"]) {
        try {
          c.architectures.push_back(ParseArchitecture(a.get<std::string>()));
        } catch (const Error& e) {
          throw ConfigError(e.what());
        }
      }
    }
    if (j.contains("transponder_scales")) {
      c.transponder_scales = j["transponder_scales"].get<std::vector<double>>();
    }
    if (j.contains("solver")) c.solver = ParseSolverChoice(j["solver"].get<std::string>());
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<uint64_t>>();
    if (j.contains("limits")) {
      const auto& l = j["limits"];
      if (l.contains("max_nodes")) c.limits.max_nodes = l["max_nodes"].get<int64_t>();
      if (l.contains("time_limit_seconds")) c.limits.time_limit_seconds = l["time_limit_seconds"];
      if (l.contains("max_improve_rounds")) c.limits.max_improve_rounds = l["max_improve_rounds"];
    }
    if (j.contains("output")) c.output_dir = resolve(j["output"].get<std::string>());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  if (c.speeds.empty() || c.architectures.empty() || c.transponder_scales.empty() ||
      c.seeds.empty()) {
    throw ConfigError("speeds, architectures, transponder_scales and seeds must be non-empty");
  }
  for (const auto& s : c.speeds) {
    if (s.empty()) throw ConfigError("empty speed set");
    for (int v : s) {
      if (v != 10 && v != 100) throw ConfigError("speeds must be 10 or 100");
    }
    for (size_t k = 1; k < s.size(); ++k) {
      if (s[k] <= s[k - 1]) throw ConfigError("speed sets must be ascending and distinct");
    }
  }
  for (double t : c.transponder_scales) {
    if (!(t >= 1.0)) throw ConfigError("transponder scales must be >= 1");
  }
  return c;
}

ScenarioConfig LoadScenarioConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseScenarioConfig(ss.str(), fs::path(path).parent_path().string());
}

namespace {

struct CellSpec {
  ScenarioName name;
  const MatrixSource* matrix = nullptr;
};

std::vector<RawEntry> ReadRawMatrix(const std::string& path, const PhysicalGraph& graph) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read matrix " + path);
  std::vector<RawEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::string a, b;
    double v = 0;
    if (!(ss >> a)) continue;
    if (!(ss >> b >> v) || v < 0) throw Error("matrix " + path + ": bad line '" + line + "'");
    out.push_back({graph.NodeByName(a), graph.NodeByName(b), v});
  }
  return out;
}

std::vector<Demand> CellDemands(const Instance& base, const MatrixSource& m, int64_t volume) {
  std::vector<RawEntry> raw;
  switch (m.kind) {
    case MatrixKind::kInstance:
      for (const Demand& d : base.demands()) {
        raw.push_back({d.source, d.target, static_cast<double>(d.gbps)});
      }
      break;
    case MatrixKind::kFile:
      raw = ReadRawMatrix(m.path, base.graph());
      break;
    case MatrixKind::kSynthetic: {
      if (volume <= 0) throw Error("synthetic matrix " + m.label + " needs a target volume");
      SynthSpec spec;
      spec.mode = m.mode;
      spec.hub_factor = m.hub_factor;
      if (m.mode == MatrixMode::kCentralized) spec.hub = base.graph().NodeByName(m.hub);
      std::vector<double> w;
      for (NodeIndex p : base.pops()) {
        auto it = m.weights.find(base.graph().node(p).name);
        w.push_back(it == m.weights.end() ? 1.0 : it->second);
      }
      for (const auto& [name, weight] : m.weights) {
        NodeIndex n = base.graph().NodeByName(name);
        if (!base.is_pop(n)) throw Error("weight given for non-PoP " + name);
      }
      return SynthMatrix(spec, base.pops(), w, static_cast<double>(volume));
    }
  }
  if (volume > 0) {
    if (raw.empty()) return {};
    return ScaleDemandMatrix(raw, static_cast<double>(volume));
  }
  std::vector<Demand> out;
  for (const RawEntry& r : raw) {
    if (r.value <= 0) continue;
    out.push_back({r.a, r.b, static_cast<int64_t>(std::ceil(r.value - 1e-9))});
  }
  return out;
}

ordered_json CellJson(const CellResult& cell, SolverChoice solver) {
  ordered_json j;
  j["name"] = cell.name.Render();
  j["status"] = cell.status;
  j["solver"] = std::string(SolverChoiceName(solver));
  if (!cell.error.empty()) j["error"] = cell.error;
  j["paths"] = cell.num_paths;
  if (!cell.objective.is_infinite()) j["objective"] = cell.objective.units();
  j["bound"] = cell.bound.units();
  j["nodes"] = cell.stats.nodes;
  j["iterations"] = cell.stats.iterations;
  if (cell.report) {
    std::ostringstream ss;
    WriteReportJson(*cell.report, ss);
    j["report"] = ordered_json::parse(ss.str());
  }
  return j;
}

CellResult RunCell(const ScenarioConfig& config, const Instance& base, const PathCatalog& catalog,
                   const CellSpec& spec) {
  CellResult r;
  r.name = spec.name;
  r.num_paths = catalog.num_paths();
  try {
    ScenarioParams params = base.params();
    params.speeds_gbps = spec.name.speeds_gbps;
    params.transponder_scale = spec.name.transponder_scale;
    params.architecture = spec.name.architecture;
    const Instance inst =
        base.WithDemands(CellDemands(base, *spec.matrix, spec.name.volume_gbps)).WithParams(params);
    const CostCatalog costs = CostCatalog::Build(inst);
    std::optional<Model> model;
    try {
      model.emplace(BuildModelFor(inst, catalog, costs));
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with("transparent infeasible")) {
        r.status = "infeasible";
        r.error = e.what();
        return r;
      }
      throw;
    }
    SolveReport rep;
    if (config.solver == SolverChoice::kExportOnly) {
      const fs::path dir = fs::path(config.output_dir) / "models";
      fs::create_directories(dir);
      ExportModel(*model, (dir / (spec.name.Render() + ".lp")).string());
      r.status = "exported";
      return r;
    }
    bool have = false;
    for (uint64_t seed : config.seeds) {
      SolveReport h = SolveHeuristic(*model, seed, config.limits);
      if (!have || (h.best && h.objective < rep.objective)) {
        rep = std::move(h);
        have = true;
      }
    }
    if (config.solver == SolverChoice::kExact) {
      rep = SolveExact(*model, config.limits, rep.best);
    }
    r.status = std::string(SolveStatusName(rep.status));
    r.objective = rep.objective;
    r.bound = rep.bound;
    r.stats = rep.stats;
    r.stats.wall_seconds = 0;
    if (rep.best) r.report = BuildReport(inst, catalog, *model, *rep.best);
  } catch (const std::exception& e) {
    r.status = "error";
    r.error = e.what();
    r.report.reset();
  }
  return r;
}

std::string CostCell(const CellResult* c, bool edge, bool core) {
  if (c == nullptr) return "-";
  if (c->status == "infeasible") return "not feasible";
  if (!c->report) return c->status;
  const Cost v = core ? c->report->core_cost : edge ? c->report->edge_cost : c->report->total_cost;
  return Fixed(v.units(), 2);
}

std::string RenderTable(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& r) {
    for (size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t k = 0; k < r.size(); ++k) {
      if (k > 0) out << "  ";
      out << r[k] << std::string(width[k] - r[k].size(), ' ');
    }
    std::string s = out.str();
    out.str("");
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string text = line(header);
  for (const auto& r : rows) text += line(r);
  return text;
}

ScenarioName ColumnKey(ScenarioName n) {
  n.architecture = Architecture::kOptimized;
  return n;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

// Per-PoP demand spread of every matrix and volume.
std::string MatrixSummary(const ScenarioConfig& config, const Instance& base,
                          const std::vector<int64_t>& volumes) {
  std::ostringstream out;
  out << "matrix,volume_gbps,demands,total_gbps,node_demand_min,node_demand_max,error\n";
  for (const MatrixSource& m : config.matrices) {
    for (int64_t v : volumes) {
      out << m.label << ',' << v << ',';
      try {
        const Instance inst = base.WithDemands(CellDemands(base, m, v));
        int64_t total = 0;
        for (const Demand& d : inst.demands()) total += d.gbps;
        const std::vector<int64_t> nd = NodeDemand(inst);
        int64_t lo = std::numeric_limits<int64_t>::max(), hi = 0;
        for (NodeIndex p : inst.pops()) {
          lo = std::min(lo, nd[p]);
          hi = std::max(hi, nd[p]);
        }
        if (inst.pops().empty()) lo = 0;
        out << inst.demands().size() << ',' << total << ',' << lo << ',' << hi << ",\n";
      } catch (const Error& e) {
        std::string err = e.what();
        for (char& ch : err) {
          if (ch == ',' || ch == '\n' || ch == '"') ch = ' ';
        }
        out << ",,,," << err << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace

void WriteSummaryCsv(const std::vector<CellResult>& cells, std::ostream& out) {
  out << "name,matrix,volume_gbps,speeds,architecture,transponder_scale,status,core_cost,"
         "edge_cost,total_cost,f_ip,f_wdm,opacity,lambdas,ip_paths,paths,error\n";
  for (const CellResult& c : cells) {
    std::string speeds;
    for (int s : c.name.speeds_gbps) speeds += (speeds.empty() ? "" : "+") + std::to_string(s);
    out << c.name.Render() << ',' << c.name.matrix << ',' << c.name.volume_gbps << ',' << speeds
        << ',' << ArchitectureName(c.name.architecture) << ','
        << Shortest(c.name.transponder_scale) << ',' << c.status << ',';
    if (c.report) {
      const TransitReport& r = *c.report;
      out << r.core_cost.ToString() << ',' << r.edge_cost.ToString() << ','
          << r.total_cost.ToString() << ',' << Decimal(r.f_ip) << ',' << Decimal(r.f_wdm) << ','
          << (r.opacity ? Decimal(*r.opacity) : "") << ',' << r.lambdas << ',' << r.ip_paths;
    } else {
      out << ",,,,,,,";
    }
    std::string err = c.error;
    for (char& ch : err) {
      if (ch == ',' || ch == '\n' || ch == '"') ch = ' ';
    }
    out << ',' << c.num_paths << ',' << err << "\n";
  }
}

std::string RenderComparison(const std::vector<CellResult>& cells) {
  std::vector<ScenarioName> columns;
  for (const CellResult& c : cells) {
    const ScenarioName key = ColumnKey(c.name);
    if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  }
  auto find = [&](const ScenarioName& key, Architecture a) -> const CellResult* {
    for (const CellResult& c : cells) {
      if (ColumnKey(c.name) == key && c.name.architecture == a) return &c;
    }
    return nullptr;
  };
  std::vector<std::string> header = {"Node architecture"};
  for (const auto& k : columns) header.push_back(k.Render());
  std::vector<std::vector<std::string>> rows;
  const std::pair<const char*, int> kinds[] = {{"core", 0}, {"edge", 1}, {"total", 2}};
  for (auto [label, kind] : kinds) {
    for (Architecture a : {Architecture::kTransparentCore, Architecture::kOptimized}) {
      std::vector<std::string> row = {std::string(a == Architecture::kOptimized ? "Optimized "
                                                                                : "Transparent ") +
                                      label};
      for (const auto& k : columns) row.push_back(CostCell(find(k, a), kind == 1, kind == 0));
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::string> diff = {"Difference"};
  for (const auto& k : columns) {
    const CellResult* t = find(k, Architecture::kTransparentCore);
    const CellResult* o = find(k, Architecture::kOptimized);
    if (t && o && t->report && o->report && t->report->total_cost > Cost::Zero()) {
      const double d = 100.0 * (o->report->total_cost.units() - t->report->total_cost.units()) /
                       t->report->total_cost.units();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%+.1f%%", d);
      diff.push_back(buf);
    } else {
      diff.push_back("");
    }
  }
  rows.push_back(std::move(diff));
  return RenderTable(header, rows);
}

RunResult RunScenarios(const ScenarioConfig& config, int jobs, bool write_files) {
  if (config.instance_path.empty()) throw ConfigError("no instance given");
  LoadOptions opts;
  opts.pops = config.pops;
  opts.drop_foreign_demands = config.drop_foreign_demands;
  if (config.channels) opts.params.channels_per_fiber = *config.channels;
  if (config.max_path_km) opts.params.max_path_km = *config.max_path_km;
  if (config.max_paths) opts.params.max_paths_per_pair = *config.max_paths;
  Instance base = [&] {
    try {
      return LoadInstanceFile(config.instance_path, opts);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }();
  const PathCatalog catalog = PathCatalog::Build(base);

  std::vector<int64_t> volumes = config.volumes_gbps;
  if (volumes.empty()) volumes.push_back(0);
  std::vector<CellSpec> specs;
  for (const MatrixSource& m : config.matrices) {
    for (int64_t v : volumes) {
      for (const auto& sp : config.speeds) {
        for (double scale : config.transponder_scales) {
          for (Architecture a : config.architectures) {
            CellSpec s;
            s.matrix = &m;
            s.name.speeds_gbps = sp;
            s.name.matrix = m.label;
            s.name.volume_gbps = v;
            s.name.transponder_scale = scale;
            s.name.architecture = a;
            for (const CellSpec& other : specs) {
              if (other.name == s.name) {
                throw ConfigError("duplicate scenario " + s.name.Render());
              }
            }
            specs.push_back(std::move(s));
          }
        }
      }
    }
  }

  RunResult result;
  result.cells.resize(specs.size());
  std::atomic<size_t> next{0};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t k = next++; k < specs.size(); k = next++) {
          result.cells[k] = RunCell(config, base, catalog, specs[k]);
        }
      });
    }
  }
  for (const CellResult& c : result.cells) {
    if (c.failed()) result.exit_code = 1;
  }
  if (write_files) {
    const fs::path out(config.output_dir);
    fs::create_directories(out / "cells");
    for (const CellResult& c : result.cells) {
      WriteFile(out / "cells" / (c.name.Render() + ".json"), CellJson(c, config.solver).dump(2) + "\n");
    }
    std::ostringstream summary;
    WriteSummaryCsv(result.cells, summary);
    WriteFile(out / "summary.csv", summary.str());
    WriteFile(out / "comparison.txt", RenderComparison(result.cells));
    WriteFile(out / "matrices.csv", MatrixSummary(config, base, volumes));
  }
  return result;
}

std::string RenderSweep(const std::vector<CellResult>& cells) {
  struct Group {
    ScenarioName key;
    std::vector<const CellResult*> cells;
  };
  std::vector<Group> groups;
  for (const CellResult& c : cells) {
    if (c.name.architecture != Architecture::kOptimized) continue;
    ScenarioName key = c.name;
    key.transponder_scale = 1.0;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.key == key; });
    if (it == groups.end()) {
      groups.push_back({key, {}});
      it = groups.end() - 1;
    }
    it->cells.push_back(&c);
  }
  std::string text;
  for (const Group& g : groups) {
    text += g.key.Render() + "\n";
    std::vector<std::string> header = {"Transponder scale"};
    for (const CellResult* c : g.cells) header.push_back(Shortest(c->name.transponder_scale));
    std::vector<std::vector<std::string>> rows;
    for (int speed : g.key.speeds_gbps) {
      std::vector<std::string> row = {std::to_string(speed) + "G transponder cost"};
      for (const CellResult* c : g.cells) {
        row.push_back(Fixed((speed == 10 ? 1.0 : 8.0) * c->name.transponder_scale, 1));
      }
      rows.push_back(std::move(row));
    }
    auto metric = [&](const char* label, auto fn) {
      std::vector<std::string> row = {label};
      for (const CellResult* c : g.cells) {
        if (c->status == "infeasible") {
          row.push_back("not feasible");
        } else if (!c->report) {
          row.push_back(c->status);
        } else {
          row.push_back(fn(*c->report));
        }
      }
      rows.push_back(std::move(row));
    };
    metric("Total cost", [](const TransitReport& r) { return Fixed(r.total_cost.units(), 2); });
    metric("F_IP", [](const TransitReport& r) { return Fixed(r.f_ip, 0); });
    metric("F_WDM", [](const TransitReport& r) { return Fixed(r.f_wdm, 0); });
    metric("Opacity", [](const TransitReport& r) { return FormatOpacity(r.opacity); });
    metric("# lambdas", [](const TransitReport& r) { return std::to_string(r.lambdas); });
    text += RenderTable(header, rows) + "\n";
  }
  return text;
}

RunResult SweepTransponder(ScenarioConfig config, int jobs, bool write_files) {
  config.architectures = {Architecture::kOptimized};
  RunResult r = RunScenarios(config, jobs, write_files);
  if (write_files) {
    const fs::path out(config.output_dir);
    WriteFile(out / "sweep.txt", RenderSweep(r.cells));
    std::ostringstream csv;
    csv << "name,transponder_scale,status,total_cost,f_ip,f_wdm,opacity,lambdas\n";
    for (const CellResult& c : r.cells) {
      csv << c.name.Render() << ',' << Shortest(c.name.transponder_scale) << ',' << c.status;
      if (c.report) {
        csv << ',' << c.report->total_cost.ToString() << ',' << Decimal(c.report->f_ip) << ','
            << Decimal(c.report->f_wdm) << ','
            << (c.report->opacity ? Decimal(*c.report->opacity) : "") << ',' << c.report->lambdas;
      } else {
        csv << ",,,,,";
      }
      csv << "\n";
    }
    WriteFile(out / "sweep.csv", csv.str());
  }
  return r;
}

}  // namespace ipwdm
