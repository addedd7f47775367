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

#include "simplex.h"

#include <cmath>
#include <limits>

namespace ipwdm::internal {
namespace {

class Tableau {
 public:
  Tableau(const DenseLp& lp, double tol) : tol_(tol), n_(lp.num_cols) {
    const int m = static_cast<int>(lp.rows.size());
    int extra = 0;
    std::vector<int> kind(m);  // 0: <=, 1: >=, 2: =
    std::vector<double> sign(m, 1.0);
    for (int r = 0; r < m; ++r) {
      kind[r] = lp.equality[r] ? 2 : 0;
      if (lp.rhs[r] < 0) {
        sign[r] = -1.0;
        if (kind[r] == 0) kind[r] = 1;
      }
      extra += kind[r] == 0 ? 1 : kind[r] == 1 ? 2 : 1;
    }
    cols_ = n_ + extra;
    t_.assign(m, std::vector<double>(cols_ + 1, 0.0));
    basis_.assign(m, -1);
    artificial_.assign(cols_, false);
    int next = n_;
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < n_; ++j) t_[r][j] = sign[r] * lp.rows[r][j];
      t_[r][cols_] = sign[r] * lp.rhs[r];
      if (kind[r] == 0) {
        t_[r][next] = 1;
        basis_[r] = next++;
      } else {
        if (kind[r] == 1) t_[r][next++] = -1;
        t_[r][next] = 1;
        artificial_[next] = true;
        basis_[r] = next++;
      }
    }
  }

  bool has_artificials() const {
    for (bool a : artificial_) {
      if (a) return true;
    }
    return false;
  }

  // Returns false when unbounded.
  bool Optimize(const std::vector<double>& cost, bool allow_artificial) {
    const int m = static_cast<int>(t_.size());
    z_.assign(cols_ + 1, 0.0);
    for (int j = 0; j < cols_; ++j) z_[j] = cost[j];
    for (int r = 0; r < m; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) z_[j] -= cb * t_[r][j];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allow_artificial && artificial_[j]) continue;
        if (z_[j] < -tol_) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        if (t_[r][enter] <= tol_) continue;
        const double ratio = t_[r][cols_] / t_[r][enter];
        if (ratio < best - tol_ || (leave >= 0 && std::abs(ratio - best) <= tol_ && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  // Pivots remaining artificial basics out where possible.
  void DropArtificials() {
    for (int r = 0; r < static_cast<int>(t_.size()); ++r) {
      if (!artificial_[basis_[r]]) continue;
      for (int j = 0; j < cols_; ++j) {
        if (!artificial_[j] && std::abs(t_[r][j]) > tol_) {
          Pivot(r, j);
          break;
        }
      }
    }
  }

  double objective() const { return -z_[cols_]; }
  int cols() const { return cols_; }
  bool artificial(int j) const { return artificial_[j]; }

  std::vector<double> Primal() const {
    std::vector<double> x(n_, 0.0);
    for (int r = 0; r < static_cast<int>(t_.size()); ++r) {
      if (basis_[r] < n_) x[basis_[r]] = std::max(0.0, t_[r][cols_]);
    }
    return x;
  }

 private:
  void Pivot(int r, int c) {
    const double p = t_[r][c];
    for (double& v : t_[r]) v /= p;
    for (int k = 0; k < static_cast<int>(t_.size()); ++k) {
      if (k == r) continue;
      const double f = t_[k][c];
      if (f == 0) continue;
      for (int j = 0; j <= cols_; ++j) t_[k][j] -= f * t_[r][j];
    }
    const double f = z_.empty() ? 0.0 : z_[c];
    if (f != 0) {
      for (int j = 0; j <= cols_; ++j) z_[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  double tol_;
  int n_;
  int cols_ = 0;
  std::vector<std::vector<double>> t_;
  std::vector<double> z_;
  std::vector<int> basis_;
  std::vector<bool> artificial_;
};

}  // namespace

LpResult SolveDenseLp(const DenseLp& lp, double tolerance) {
  Tableau tab(lp, tolerance);
  LpResult result;
  if (tab.has_artificials()) {
    std::vector<double> phase1(tab.cols(), 0.0);
    for (int j = 0; j < tab.cols(); ++j) phase1[j] = tab.artificial(j) ? 1.0 : 0.0;
    tab.Optimize(phase1, true);
    double scale = 1.0;
    for (double b : lp.rhs) scale = std::max(scale, std::abs(b));
    if (tab.objective() > tolerance * scale * 100) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    tab.DropArtificials();
  }
  std::vector<double> phase2(tab.cols(), 0.0);
  for (int j = 0; j < lp.num_cols; ++j) phase2[j] = lp.objective.empty() ? 0.0 : lp.objective[j];
  if (!tab.Optimize(phase2, false)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.objective = tab.objective();
  result.x = tab.Primal();
  return result;
}

}  // namespace ipwdm::internal
