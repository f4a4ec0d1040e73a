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

#include "invsp/construct.hpp"

#include <cmath>
#include <map>

namespace invsp {

CyclotomicElement::CyclotomicElement(int p) : p_(p), coeffs_(p - 1) {
  if (!IsPrime(p)) throw UnsupportedError("cyclotomic arithmetic needs a prime p, got " + std::to_string(p));
}

CyclotomicElement CyclotomicElement::FromRational(int p, const Rational& value) {
  CyclotomicElement e(p);
  e.coeffs_[0] = value;
  return e;
}

CyclotomicElement CyclotomicElement::RootPower(int p, long k) {
  std::vector<Rational> v(p);
  v[((k % p) + p) % p] = 1;
  return Reduce(p, std::move(v));
}

CyclotomicElement CyclotomicElement::Reduce(int p, std::vector<Rational> by_exponent) {
  CyclotomicElement e(p);
  std::vector<Rational> folded(p);
  for (std::size_t k = 0; k < by_exponent.size(); ++k) folded[k % p] += by_exponent[k];
  const Rational top = folded[p - 1];
  for (int k = 0; k < p - 1; ++k) e.coeffs_[k] = folded[k] - top;
  return e;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational CyclotomicElement::rational_value() const {
  if (!is_rational()) throw ConsistencyError("cyclotomic element is not rational");
  return coeffs_[0];
}

void CyclotomicElement::CheckSameField(const CyclotomicElement& other) const {
  if (p_ != other.p_) throw DimensionError("cyclotomic elements from different fields");
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
  CheckSameField(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& other) {
  CheckSameField(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  a.CheckSameField(b);
  std::vector<Rational> prod(2 * a.p_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicElement::Reduce(a.p_, std::move(prod));
}

Integer CoefficientC(int r, int j) {
  if (r < 1 || j < 1 || j > r) {
    throw UnsupportedError("c(r, j) needs 1 <= j <= r, got r=" + std::to_string(r) +
                           " j=" + std::to_string(j));
  }
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * r - j, j - 1);
  Integer numer = (2 * r + 1) * binom;
  if (numer % j != 0) throw ConsistencyError("c(r, j) is not an integer");
  return numer / j;
}

Polynomial BasicPolyClosed(const GroupSpec& g) {
  switch (g.family()) {
    case GroupFamily::kScalar: {
      const int n = g.source_dim();
      Polynomial linear(n);
      for (int i = 0; i < n; ++i) linear += Polynomial::Variable(n, i);
      return linear.Pow(g.order());
    }
    case GroupFamily::kWeighted: {
      if (g.q() == 1) return (Polynomial::Variable(2, 0) + Polynomial::Variable(2, 1)).Pow(g.order());
      if (g.q() != 2) {
        throw UnsupportedError("no closed form for " + g.ToString() + "; use the product construction");
      }
      const int r = g.r();
      const unsigned p = g.order();
      Polynomial f(2);
      f.AddTerm(Monomial{p, 0}, 1);
      f.AddTerm(Monomial{0, p}, 1);
      for (int j = 1; j <= r; ++j) f.AddTerm(Monomial{p - 2u * j, static_cast<unsigned>(j)}, Rational(CoefficientC(r, j)));
      return f;
    }
    case GroupFamily::kGamma7: {
      Polynomial f(3);
      for (const Monomial& m : {Monomial{7, 0, 0}, Monomial{0, 7, 0}, Monomial{0, 0, 7}}) f.AddTerm(m, 1);
      for (const Monomial& m : {Monomial{3, 2, 0}, Monomial{2, 0, 3}, Monomial{0, 3, 2}, Monomial{1, 1, 1}}) {
        f.AddTerm(m, 14);
      }
      for (const Monomial& m : {Monomial{5, 1, 0}, Monomial{1, 0, 5}, Monomial{0, 5, 1}, Monomial{1, 3, 0},
                                Monomial{3, 0, 1}, Monomial{0, 1, 3}}) {
        f.AddTerm(m, 7);
      }
      for (const Monomial& m : {Monomial{1, 2, 4}, Monomial{2, 4, 1}, Monomial{4, 1, 2}, Monomial{2, 2, 2}}) {
        f.AddTerm(m, 7);
      }
      return f;
    }
  }
  throw UnsupportedError("unknown group family");
}

Polynomial BasicPolyProduct(int p, std::span<const int> weights) {
  if (!IsPrime(p)) throw UnsupportedError("product construction needs a prime p, got " + std::to_string(p));
  const int n = static_cast<int>(weights.size());
  if (n < 1 || n > kMaxVars) throw UnsupportedError("product construction needs 1..3 weights");
  for (int w : weights) {
    if (w % p == 0) throw UnsupportedError("weights must be coprime to p");
  }

  using CycloPoly = std::map<Monomial, CyclotomicElement>;
  CycloPoly product;
  product.emplace(Monomial(n), CyclotomicElement::FromRational(p, 1));
  for (int j = 1; j <= p; ++j) {
    // factor = 1 - sum_i eta^{w_i j} x_i
    std::vector<std::pair<Monomial, CyclotomicElement>> factor;
    factor.emplace_back(Monomial(n), CyclotomicElement::FromRational(p, 1));
    for (int i = 0; i < n; ++i) {
      factor.emplace_back(Monomial(n).with(i, 1),
                          CyclotomicElement::FromRational(p, -1) *
                              CyclotomicElement::RootPower(p, static_cast<long>(weights[i]) * j));
    }
    CycloPoly next;
    for (const auto& [m, c] : product) {
      for (const auto& [fm, fc] : factor) {
        auto it = next.try_emplace(m * fm, p).first;
        it->second += c * fc;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    product = std::move(next);
  }

  Polynomial phi = Polynomial::Constant(n, 1);
  for (const auto& [m, c] : product) {
    if (!c.is_rational()) {
      throw ConsistencyError("product construction left an irrational coefficient at " + m.ToString());
    }
    phi.AddTerm(m, -c.rational_value());
  }
  return phi;
}

Polynomial BasicPolynomial(const GroupSpec& g) {
  if (g.family() == GroupFamily::kWeighted && g.q() != 1 && g.q() != 2) {
    return BasicPolyProduct(g.order(), g.weights());
  }
  return BasicPolyClosed(g);
}

bool ModReductionCheck(int r) {
  if (r < 1) throw UnsupportedError("mod reduction check needs r >= 1");
  for (int j = 1; j <= r; ++j) {
    if (CoefficientC(r, j) % (2 * r + 1) != 0) return false;
  }
  return true;
}

double RadicalFormulaEval(int r, double x, double y) {
  const double s = std::sqrt(x * x + 4 * y);
  const int e = 2 * r + 1;
  return std::pow((x + s) / 2, e) + std::pow((x - s) / 2, e) + std::pow(y, e);
}

}  // namespace invsp
