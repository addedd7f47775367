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

#include <cmath>
#include <iomanip>
#include <sstream>

#include "ipwdm/solve.h"

namespace ipwdm {
namespace {

constexpr double kTolerance = 1e-6;

std::string Format(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

}  // namespace

std::vector<Violation> CheckFeasibility(const Model& model, const Solution& solution) {
  if (static_cast<int>(solution.values.size()) != model.num_variables()) {
    throw Error("solution size does not match the model");
  }
  std::vector<Violation> out;
  std::vector<double> value(solution.values);
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    double x = value[v];
    if (std::isnan(x)) {
      out.push_back({ViolationKind::kBound, v, {}, var.name, x, 0, var.name + " has no value"});
      value[v] = 0;
      continue;
    }
    if (var.integer) {
      const double r = std::round(x);
      if (std::abs(x - r) > kTolerance) {
        out.push_back({ViolationKind::kIntegrality, v, {}, var.name, x, r,
                       var.name + " = " + Format(x) + " is not integral"});
      }
      value[v] = x = r;
    }
    if (x < var.lower - kTolerance) {
      out.push_back({ViolationKind::kBound, v, {}, var.name, x, var.lower,
                     var.name + " = " + Format(x) + " below its lower bound " +
                         Format(var.lower)});
    }
    if (x > var.upper + kTolerance) {
      out.push_back({ViolationKind::kBound, v, {}, var.name, x, var.upper,
                     var.name + " = " + Format(x) + " above its upper bound " +
                         Format(var.upper)});
    }
  }
  for (int r = 0; r < model.num_rows(); ++r) {
    const Row& row = model.row(r);
    bool integral = true;
    double lhs = 0;
    int64_t exact = 0;
    for (const Term& t : row.terms) {
      const Variable& var = model.variable(t.var);
      lhs += t.coef * value[t.var];
      if (var.integer && t.coef == std::floor(t.coef)) {
        exact += static_cast<int64_t>(t.coef) * static_cast<int64_t>(value[t.var]);
      } else {
        integral = false;
      }
    }
    integral = integral && row.rhs == std::floor(row.rhs);
    bool ok;
    if (integral) {
      const auto rhs = static_cast<int64_t>(row.rhs);
      ok = row.sense == Sense::kEqual ? exact == rhs : exact <= rhs;
      lhs = static_cast<double>(exact);
    } else {
      ok = row.sense == Sense::kEqual ? std::abs(lhs - row.rhs) <= kTolerance
                                      : lhs <= row.rhs + kTolerance;
    }
    if (ok) continue;
    std::string desc(RowKindName(row.kind));
    desc += " \"";
    desc += RowFormula(row.kind);
    desc += "\" violated at " + row.name + ": " + Format(lhs) +
            (row.sense == Sense::kEqual ? " != " : " > ") + Format(row.rhs);
    out.push_back({ViolationKind::kRow, r, row.kind, row.name, lhs, row.rhs, desc});
  }
  return out;
}

}  // namespace ipwdm
