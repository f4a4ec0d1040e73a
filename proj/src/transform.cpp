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

#include "invsp/transform.hpp"

#include <algorithm>

#include "invsp/construct.hpp"

namespace invsp {

Polynomial TensorStep(const Polynomial& f, const Polynomial& h) {
  if (f.nvars() != h.nvars()) throw DimensionError("tensor step: dimension mismatch");
  return f - h + h * f;
}

std::string SpecialReport::ToString() const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += "special:                " + std::string(yn(is_special())) + "\n";
  out += "invariant:              " + std::string(yn(invariant)) + "\n";
  out += "constant on hyperplane: " + std::string(yn(constant_on_hyperplane)) + "\n";
  out += "non-negative:           " + std::string(yn(nonneg)) + "\n";
  out += "zero at origin:         " + std::string(yn(zero_at_origin)) + "\n";
  out += "terms:                  " + std::to_string(n_terms) + "\n";
  out += "degree:                 " + std::to_string(degree) + "\n";
  return out;
}

SpecialReport ValidateSpecial(const GroupSpec& g, const Polynomial& f) {
  if (f.nvars() != g.source_dim()) throw DimensionError("validate: polynomial dimension does not match group");
  SpecialReport report;
  report.invariant = IsInvariant(g, f);
  const Polynomial restricted = RestrictToHyperplane(f);
  report.constant_on_hyperplane = restricted == Polynomial::Constant(restricted.nvars(), 1);
  report.nonneg = std::all_of(f.terms().begin(), f.terms().end(),
                              [](const auto& term) { return term.second > 0; });
  report.zero_at_origin = f.constant_term() == 0;
  report.n_terms = f.term_count();
  report.degree = f.degree();
  return report;
}

int DegreeBound(int n, int num_terms) {
  if (num_terms < 1) throw UnsupportedError("degree bound needs N >= 1");
  switch (n) {
    case 2:
      return 2 * num_terms - 3;
    case 3:
      return (num_terms - 1) / 2;
    default:
      throw UnsupportedError("degree bound is only available in source dimension 2 or 3");
  }
}

Polynomial ExactDivide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DimensionError("division: dimension mismatch");
  const auto& [lead_m, lead_c] = *b.terms().begin();
  Polynomial quotient(a.nvars());
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().begin();
    if (!lead_m.Divides(m)) {
      throw Error("division is not exact: leading term " + m.ToString() + " of the remainder is not divisible by " +
                  lead_m.ToString());
    }
    const Monomial qm = m.Quotient(lead_m);
    const Rational qc = c / lead_c;
    quotient.AddTerm(qm, qc);
    rest -= b.MultiplyMonomial(qm, qc);
  }
  return quotient;
}

Polynomial QuotientH(const GroupSpec& g, const Polynomial& big_g) {
  const Polynomial f = BasicPolynomial(g);
  return ExactDivide(big_g - f, f - Polynomial::Constant(f.nvars(), 1));
}

}  // namespace invsp
