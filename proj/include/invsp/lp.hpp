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

// Exact rational linear programming: dense two-phase primal simplex with
// Bland's rule. Intended for small problems (tens of variables, ~100 rows).

#ifndef INVSP_LP_HPP_
#define INVSP_LP_HPP_

#include <optional>
#include <vector>

#include "invsp/rational.hpp"

namespace invsp::lp {

enum class Relation { kLessEq, kEqual, kGreaterEq };

struct Constraint {
  std::vector<Rational> coeffs;  // one per variable
  Relation relation = Relation::kLessEq;
  Rational rhs;
};

struct Problem {
  explicit Problem(int num_vars)
      : lower(num_vars), upper(num_vars), objective(num_vars) {}

  int num_vars() const { return static_cast<int>(objective.size()); }
  void Add(std::vector<Rational> coeffs, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
  }

  std::vector<std::optional<Rational>> lower;  // nullopt = unbounded
  std::vector<std::optional<Rational>> upper;
  std::vector<Constraint> constraints;
  std::vector<Rational> objective;  // maximised
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  long pivots = 0;
};

Solution Maximize(const Problem& problem);

}  // namespace invsp::lp

#endif  // INVSP_LP_HPP_
