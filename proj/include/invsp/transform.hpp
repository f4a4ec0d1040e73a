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

#ifndef INVSP_TRANSFORM_HPP_
#define INVSP_TRANSFORM_HPP_

#include <string>

#include "invsp/groups.hpp"
#include "invsp/polynomial.hpp"

namespace invsp {

// G = F - H + H*F. If F is 1 on the hyperplane so is G, for any H.
Polynomial TensorStep(const Polynomial& f, const Polynomial& h);

struct SpecialReport {
  bool invariant = false;
  bool constant_on_hyperplane = false;
  bool nonneg = false;
  bool zero_at_origin = false;
  std::size_t n_terms = 0;
  int degree = -1;

  bool is_special() const {
    return invariant && constant_on_hyperplane && nonneg && zero_at_origin && n_terms > 0;
  }
  std::string ToString() const;
};

SpecialReport ValidateSpecial(const GroupSpec& g, const Polynomial& f);

// Largest degree a good polynomial with N terms can have in source
// dimension n: 2N - 3 for n = 2 and floor((N - 1) / 2) for n = 3.
int DegreeBound(int n, int num_terms);

// The invariant H with G = F - H + H*F, F the basic polynomial of g, by exact
// division of G - F by F - 1. Throws Error when the division leaves a
// remainder.
Polynomial QuotientH(const GroupSpec& g, const Polynomial& big_g);

// Exact division of a by b; throws Error on a nonzero remainder.
Polynomial ExactDivide(const Polynomial& a, const Polynomial& b);

}  // namespace invsp

#endif  // INVSP_TRANSFORM_HPP_
