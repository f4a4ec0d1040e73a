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

// Sparse multivariate polynomials with exact rational coefficients in at
// most three variables x > y > z.
//
// Terms are kept in a map keyed by exponent vector and ordered by graded
// lexicographic order, leading term first. A coefficient that becomes zero is
// erased immediately, so the stored term count is always N(f).

#ifndef INVSP_POLYNOMIAL_HPP_
#define INVSP_POLYNOMIAL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>

#include "invsp/rational.hpp"

namespace invsp {

inline constexpr int kMaxVars = 3;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial FromSpan(std::span<const unsigned> exponents);

  int nvars() const { return nvars_; }
  unsigned operator[](int i) const { return exps_[i]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial with(int i, unsigned e) const;
  Monomial operator*(const Monomial& other) const;
  bool Divides(const Monomial& other) const;
  // Requires Divides(other).
  Monomial Quotient(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const = default;
  // Graded lexicographic: total degree first, then exponents compared
  // left to right (x > y > z).
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string ToString() const;

 private:
  std::array<std::uint32_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

  explicit Polynomial(int nvars = 1);
  static Polynomial Constant(int nvars, const Rational& c);
  static Polynomial Variable(int nvars, int index);
  static Polynomial Term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_constant() const;

  // Accumulates c into the coefficient of m; drops the term on cancellation.
  void AddTerm(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial MultiplyMonomial(const Monomial& m, const Rational& c) const;
  Polynomial Pow(unsigned k) const;

  bool operator==(const Polynomial& other) const = default;

  // Human-readable form, e.g. "x^3 + 3*x^2*y + 1/2*y".
  std::string ToString() const;

 private:
  void CheckSameDimension(const Polynomial& other) const;

  int nvars_;
  TermMap terms_;
};

inline std::size_t term_count(const Polynomial& f) { return f.term_count(); }

// Substitutes the last variable by 1 - (sum of the others); for one variable
// substitutes x = 1. The result has nvars - 1 variables.
Polynomial RestrictToHyperplane(const Polynomial& f);

// True iff every coefficient of h - g is non-negative.
bool Dominates(const Polynomial& g, const Polynomial& h);

}  // namespace invsp

#endif  // INVSP_POLYNOMIAL_HPP_
