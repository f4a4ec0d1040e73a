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

// Basic polynomials, built two independent ways: from closed forms and from
// the product  1 - prod_{j=1..p} (1 - sum_i eta^{w_i j} x_i)  evaluated over
// the cyclotomic integers.

#ifndef INVSP_CONSTRUCT_HPP_
#define INVSP_CONSTRUCT_HPP_

#include <span>
#include <vector>

#include "invsp/groups.hpp"
#include "invsp/polynomial.hpp"

namespace invsp {

// Element of Q(eta), eta a primitive p-th root of unity (p prime), stored in
// the basis 1, eta, ..., eta^{p-2}. eta^{p-1} is eagerly rewritten as
// -(1 + eta + ... + eta^{p-2}), so the representation is unique.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(int p);
  static CyclotomicElement FromRational(int p, const Rational& value);
  // eta^k for any integer k.
  static CyclotomicElement RootPower(int p, long k);

  int p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  // Throws ConsistencyError when the element is not rational.
  Rational rational_value() const;

  CyclotomicElement& operator+=(const CyclotomicElement& other);
  CyclotomicElement& operator-=(const CyclotomicElement& other);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  bool operator==(const CyclotomicElement& other) const = default;

 private:
  // Folds a vector indexed by exponent mod p into the reduced basis.
  static CyclotomicElement Reduce(int p, std::vector<Rational> by_exponent);
  void CheckSameField(const CyclotomicElement& other) const;

  int p_;
  std::vector<Rational> coeffs_;
};

// c(r, j) = (2r+1)/j * binomial(2r-j, j-1), 1 <= j <= r. Always an integer.
Integer CoefficientC(int r, int j);

// Closed forms: x^m / (x+y)^m, f_{2r+1}, and the 17-term polynomial for
// gamma7. Weighted groups with q outside {1, 2} have no closed form.
Polynomial BasicPolyClosed(const GroupSpec& g);

// The product construction for prime p. Throws ConsistencyError if a
// coefficient fails to be rational after reduction.
Polynomial BasicPolyProduct(int p, std::span<const int> weights);

// Closed form where one exists, otherwise the product construction.
Polynomial BasicPolynomial(const GroupSpec& g);

// Whether every middle coefficient c(r, j) of f_{2r+1} is divisible by 2r+1.
bool ModReductionCheck(int r);

// Floating-point evaluation of f_{2r+1} through the radical formula
//   ((x + s)/2)^{2r+1} + ((x - s)/2)^{2r+1} + y^{2r+1},  s = sqrt(x^2 + 4y).
// Non-normative; used only as a spot check for x, y >= 0.
double RadicalFormulaEval(int r, double x, double y);

}  // namespace invsp

#endif  // INVSP_CONSTRUCT_HPP_
