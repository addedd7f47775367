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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <regex>
#include <sstream>

#include "ipwdm/milp.h"

namespace ipwdm {
namespace {

constexpr int kTermsPerLine = 8;

std::string Number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 1e15) {
    return std::to_string(static_cast<int64_t>(x));
  }
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void WriteTerm(std::ostream& out, bool first, const std::string& coef, const std::string& name) {
  bool negative = !coef.empty() && coef[0] == '-';
  if (first) {
    out << ' ' << (negative ? "- " : "") << (negative ? coef.substr(1) : coef) << ' ' << name;
  } else {
    out << (negative ? " - " : " + ") << (negative ? coef.substr(1) : coef) << ' ' << name;
  }
}

struct LineBreaker {
  std::ostream& out;
  int count = 0;
  void Next() {
    if (++count % kTermsPerLine == 0) out << "\n  ";
  }
};

}  // namespace

void WriteLp(const Model& model, std::ostream& out) {
  out << "\\ ipwdm " << ArchitectureName(model.architecture()) << " model: "
      << model.num_variables() << " variables, " << model.num_rows() << " rows\n";
  out << "Minimize\n obj:";
  {
    LineBreaker lb{out};
    bool first = true;
    for (const Variable& v : model.variables()) {
      if (v.cost == Cost::Zero()) continue;
      WriteTerm(out, first, v.cost.ToString(), v.name);
      first = false;
      lb.Next();
    }
    if (first && model.num_variables() > 0) out << " 0 " << model.variable(0).name;
  }
  out << "\nSubject To\n";
  for (const Row& r : model.rows()) {
    out << ' ' << r.name << ':';
    LineBreaker lb{out};
    bool first = true;
    for (const Term& t : r.terms) {
      WriteTerm(out, first, Number(t.coef), model.variable(t.var).name);
      first = false;
      lb.Next();
    }
    out << (r.sense == Sense::kEqual ? " = " : " <= ") << Number(r.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables()) {
    if (v.binary) continue;
    if (v.fixed()) {
      out << ' ' << v.name << " = " << Number(v.lower) << "\n";
    } else if (v.lower != 0 || std::isfinite(v.upper)) {
      out << ' ' << Number(v.lower) << " <= " << v.name << " <= "
          << (std::isfinite(v.upper) ? Number(v.upper) : std::string("+inf")) << "\n";
    }
  }
  auto list = [&](const char* header, auto pred) {
    bool any = false;
    LineBreaker lb{out};
    for (const Variable& v : model.variables()) {
      if (!pred(v)) continue;
      if (!any) out << header << "\n";
      any = true;
      out << ' ' << v.name;
      lb.Next();
    }
    if (any) out << "\n";
  };
  list("General", [](const Variable& v) { return v.integer && !v.binary; });
  list("Binary", [](const Variable& v) { return v.binary; });
  out << "End\n";
}

void ExportModel(const Model& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  WriteLp(model, out);
  if (!out) throw Error("error writing " + path);
}

namespace {

double ParseValue(const std::string& text, const std::string& context) {
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error("bad value '" + text + "' for " + context);
  }
}

void Assign(const Model& model, ImportedSolution& sol, const std::string& name, double value) {
  const int v = model.FindVariable(name);
  if (v < 0) throw Error("solution names unknown variable " + name);
  sol.solution.values[v] = value;
}

void ParseXml(const Model& model, const std::string& text, ImportedSolution& sol) {
  static const std::regex kVariable(R"(<variable\s[^>]*>)");
  static const std::regex kName(R"(\bname\s*=\s*"([^"]*)\")");
  static const std::regex kValue(R"(\bvalue\s*=\s*"([^"]*)\")");
  static const std::regex kObjective(R"(objectiveValue\s*=\s*"([^"]*)\")");
  std::smatch m;
  if (std::regex_search(text, m, kObjective)) sol.objective = ParseValue(m[1], "objective");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kVariable);
       it != std::sregex_iterator(); ++it) {
    const std::string tag = it->str();
    std::smatch name, value;
    if (!std::regex_search(tag, name, kName) || !std::regex_search(tag, value, kValue)) {
      throw Error("malformed <variable> element: " + tag);
    }
    Assign(model, sol, name[1], ParseValue(value[1], name[1]));
  }
}

void ParseText(const Model& model, const std::string& text, ImportedSolution& sol) {
  static const std::regex kObjective(R"(^#\s*Objective value\s*=\s*(\S+))",
                                     std::regex::icase);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::smatch m;
    if (std::regex_search(line, m, kObjective)) {
      sol.objective = ParseValue(m[1], "objective");
      continue;
    }
    std::istringstream ss(line.substr(0, line.find('#')));
    std::string name, value, extra;
    if (!(ss >> name)) continue;
    if (!(ss >> value) || (ss >> extra)) {
      throw Error("solution line " + std::to_string(line_no) + ": expected '<name> <value>'");
    }
    Assign(model, sol, name, ParseValue(value, name));
  }
}

}  // namespace

ImportedSolution ImportSolution(const Model& model, std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  ImportedSolution sol;
  sol.solution.values.assign(model.num_variables(), std::nan(""));
  if (text.find("<variable") != std::string::npos || text.find("<?xml") != std::string::npos) {
    ParseXml(model, text, sol);
  } else {
    ParseText(model, text, sol);
  }
  for (int v = 0; v < model.num_variables(); ++v) {
    if (std::isnan(sol.solution.values[v])) sol.missing.push_back(model.variable(v).name);
  }
  return sol;
}

ImportedSolution ImportSolutionFile(const Model& model, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return ImportSolution(model, in);
}

void WriteSolution(const Model& model, const Solution& solution, std::ostream& out,
                   std::optional<double> objective) {
  if (objective) out << "# Objective value = " << Number(*objective) << "\n";
  for (int v = 0; v < model.num_variables(); ++v) {
    out << model.variable(v).name << ' ' << Number(solution.values.at(v)) << "\n";
  }
}

}  // namespace ipwdm
