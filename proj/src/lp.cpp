// Copyright 2026 The invsp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "invsp/lp.hpp"

#include <cstddef>

namespace invsp::lp {
namespace {

// x_var = offset + sum(sign * column)
struct VarMap {
  Rational offset;
  std::vector<std::pair<int, int>> columns;  // (column, sign)
};

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, int num_structural)
      : m_(static_cast<int>(rows.size())), num_structural_(num_structural) {
    n_ = num_structural + m_;  // one artificial per row
    t_.assign(m_, std::vector<Rational>(n_ + 1));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < num_structural; ++j) t_[i][j] = rows[i][j];
      t_[i][num_structural + i] = 1;
      t_[i][n_] = rhs[i];
      basis_[i] = num_structural + i;
    }
  }

  // Returns false when the constraints are infeasible.
  bool PhaseOne() {
    obj_.assign(n_ + 1, 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < num_structural_; ++j) obj_[j] += t_[i][j];
      obj_[n_] += t_[i][n_];
    }
    allow_artificial_ = true;
    Run();
    if (obj_[n_] > 0) return false;
    DriveOutArtificials();
    allow_artificial_ = false;
    return true;
  }

  // Returns false when the objective is unbounded.
  bool PhaseTwo(const std::vector<Rational>& cost) {
    obj_.assign(n_ + 1, 0);
    for (int j = 0; j < num_structural_; ++j) obj_[j] = cost[j];
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[i];
      if (b >= num_structural_ || cost[b] == 0) continue;
      for (int j = 0; j <= n_; ++j) {
        if (j < num_structural_ || j == n_) obj_[j] -= cost[b] * t_[i][j];
      }
    }
    return Run();
  }

  std::vector<Rational> Values() const {
    std::vector<Rational> x(num_structural_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < num_structural_) x[basis_[i]] = t_[i][n_];
    }
    return x;
  }

  Rational ObjectiveValue() const { return -obj_[n_]; }
  long pivots() const { return pivots_; }

 private:
  bool Enterable(int j) const { return j < num_structural_ || allow_artificial_; }

  // Bland's rule. Returns false on unboundedness.
  bool Run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (Enterable(j) && obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][n_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(int r, int e) {
    ++pivots_;
    const Rational inv = 1 / t_[r][e];
    for (int j = 0; j <= n_; ++j) {
      if (t_[r][j] != 0) t_[r][j] *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[e] == 0) return;
      const Rational factor = row[e];
      for (int j = 0; j <= n_; ++j) {
        if (t_[r][j] != 0) row[j] -= factor * t_[r][j];
      }
    };
    for (int i = 0; i < m_; ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(obj_);
    basis_[r] = e;
  }

  void DriveOutArtificials() {
    for (int i = 0; i < m_;) {
      if (basis_[i] < num_structural_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < num_structural_; ++j) {
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        Pivot(i, col);
        ++i;
      } else {
        // Redundant row.
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
  }

  int m_;
  int n_;
  int num_structural_;
  bool allow_artificial_ = false;
  long pivots_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
};

}  // namespace

Solution Maximize(const Problem& problem) {
  const int nv = problem.num_vars();
  std::vector<VarMap> vars(nv);
  int ncols = 0;
  std::vector<std::pair<int, Rational>> upper_rows;  // (column, bound) meaning col <= bound
  for (int i = 0; i < nv; ++i) {
    const auto& lo = problem.lower[i];
    const auto& hi = problem.upper[i];
    if (lo) {
      vars[i].offset = *lo;
      vars[i].columns.push_back({ncols, 1});
      if (hi) upper_rows.push_back({ncols, *hi - *lo});
      ++ncols;
    } else if (hi) {
      vars[i].offset = *hi;
      vars[i].columns.push_back({ncols++, -1});
    } else {
      vars[i].columns.push_back({ncols++, 1});
      vars[i].columns.push_back({ncols++, -1});
    }
  }

  struct Row {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const Constraint& c : problem.constraints) {
    Row row{std::vector<Rational>(ncols), c.relation, c.rhs};
    for (int i = 0; i < nv; ++i) {
      if (c.coeffs[i] == 0) continue;
      row.rhs -= c.coeffs[i] * vars[i].offset;
      for (auto [col, sign] : vars[i].columns) row.coeffs[col] += sign * c.coeffs[i];
    }
    rows.push_back(std::move(row));
  }
  for (auto& [col, bound] : upper_rows) {
    Row row{std::vector<Rational>(ncols), Relation::kLessEq, bound};
    row.coeffs[col] = 1;
    rows.push_back(std::move(row));
  }

  int nslack = 0;
  for (const Row& row : rows) nslack += row.relation != Relation::kEqual;
  const int nstruct = ncols + nslack;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  int slack = ncols;
  for (const Row& row : rows) {
    std::vector<Rational> full(nstruct);
    for (int j = 0; j < ncols; ++j) full[j] = row.coeffs[j];
    if (row.relation == Relation::kLessEq) full[slack++] = 1;
    if (row.relation == Relation::kGreaterEq) full[slack++] = -1;
    Rational rhs = row.rhs;
    if (rhs < 0) {
      for (auto& v : full) v = -v;
      rhs = -rhs;
    }
    a.push_back(std::move(full));
    b.push_back(std::move(rhs));
  }

  std::vector<Rational> cost(nstruct);
  Rational cost_offset;
  for (int i = 0; i < nv; ++i) {
    cost_offset += problem.objective[i] * vars[i].offset;
    for (auto [col, sign] : vars[i].columns) cost[col] += sign * problem.objective[i];
  }

  Solution sol;
  Tableau tab(std::move(a), std::move(b), nstruct);
  if (!tab.PhaseOne()) {
    sol.status = Status::kInfeasible;
    sol.pivots = tab.pivots();
    return sol;
  }
  const bool bounded = tab.PhaseTwo(cost);
  sol.pivots = tab.pivots();
  if (!bounded) {
    sol.status = Status::kUnbounded;
    return sol;
  }
  sol.status = Status::kOptimal;
  sol.value = tab.ObjectiveValue() + cost_offset;
  const auto cols = tab.Values();
  sol.x.resize(nv);
  for (int i = 0; i < nv; ++i) {
    sol.x[i] = vars[i].offset;
    for (auto [col, sign] : vars[i].columns) sol.x[i] += sign * cols[col];
  }
  return sol;
}

}  // namespace invsp::lp
