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

#ifndef IPWDM_SRC_SIMPLEX_H_
#define IPWDM_SRC_SIMPLEX_H_

#include <vector>

namespace ipwdm::internal {

// min c.x  s.t.  a_r.x (<= | =) b_r,  x >= 0.
struct DenseLp {
  int num_cols = 0;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<bool> equality;
  std::vector<double> objective;

  void AddRow(std::vector<double> coefs, bool is_equality, double b) {
    rows.push_back(std::move(coefs));
    equality.push_back(is_equality);
    rhs.push_back(b);
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0;
  std::vector<double> x;
};

// Two-phase tableau simplex with Bland's rule; meant for small dense LPs.
LpResult SolveDenseLp(const DenseLp& lp, double tolerance = 1e-9);

}  // namespace ipwdm::internal

#endif  // IPWDM_SRC_SIMPLEX_H_
