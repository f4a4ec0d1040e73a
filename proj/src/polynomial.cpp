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

#include "invsp/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace invsp {
namespace {

constexpr char kVarNames[kMaxVars] = {'x', 'y', 'z'};

void CheckNvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw UnsupportedError("polynomials support 0.." + std::to_string(kMaxVars) +
                           " variables, got " + std::to_string(nvars));
  }
}

}  // namespace

Monomial::Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { CheckNvars(nvars); }

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(static_cast<int>(exponents.size())) {
  int i = 0;
  for (unsigned e : exponents) exps_[i++] = e;
}

Monomial Monomial::FromSpan(std::span<const unsigned> exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exps_[i] = exponents[i];
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (int i = 0; i < nvars_; ++i) d += exps_[i];
  return d;
}

Monomial Monomial::with(int i, unsigned e) const {
  Monomial m = *this;
  m.exps_[i] = e;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw DimensionError("monomial dimension mismatch");
  Monomial m = *this;
  for (int i = 0; i < nvars_; ++i) m.exps_[i] += other.exps_[i];
  return m;
}

bool Monomial::Divides(const Monomial& other) const {
  if (nvars_ != other.nvars_) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::Quotient(const Monomial& divisor) const {
  Monomial m = *this;
  for (int i = 0; i < nvars_; ++i) m.exps_[i] -= divisor.exps_[i];
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (nvars_ != other.nvars_) return nvars_ <=> other.nvars_;
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (int i = 0; i < nvars_; ++i) {
    if (auto c = exps_[i] <=> other.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::ToString() const {
  std::string out;
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) { CheckNvars(nvars); }

Polynomial Polynomial::Constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.AddTerm(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::Variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
  return Term(Monomial(nvars).with(index, 1), 1);
}

Polynomial Polynomial::Term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.AddTerm(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Polynomial::AddTerm(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionError("term dimension does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::CheckSameDimension(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  CheckSameDimension(other);
  for (const auto& [m, c] : other.terms_) AddTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  CheckSameDimension(other);
  for (const auto& [m, c] : other.terms_) AddTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.CheckSameDimension(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.AddTerm(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::MultiplyMonomial(const Monomial& m, const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

Polynomial Polynomial::Pow(unsigned k) const {
  Polynomial result = Constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += invsp::ToString(mag);
    } else if (mag == 1) {
      out += m.ToString();
    } else {
      out += invsp::ToString(mag) + '*' + m.ToString();
    }
  }
  return out;
}

Polynomial RestrictToHyperplane(const Polynomial& f) {
  const int n = f.nvars();
  if (n < 1 || n > kMaxVars) {
    throw UnsupportedError("hyperplane restriction needs 1..3 variables, got " + std::to_string(n));
  }
  const int last = n - 1;
  // line = 1 - (x_0 + ... + x_{n-2}) in n - 1 variables.
  Polynomial line = Polynomial::Constant(n - 1, 1);
  for (int i = 0; i < last; ++i) line -= Polynomial::Variable(n - 1, i);

  std::vector<Polynomial> powers{Polynomial::Constant(n - 1, 1)};
  Polynomial out(n - 1);
  std::array<unsigned, kMaxVars> head{};
  for (const auto& [m, c] : f.terms()) {
    const unsigned k = m[last];
    while (powers.size() <= k) powers.push_back(powers.back() * line);
    for (int i = 0; i < last; ++i) head[i] = m[i];
    const Monomial prefix = Monomial::FromSpan(std::span<const unsigned>(head.data(), last));
    out += powers[k].MultiplyMonomial(prefix, c);
  }
  return out;
}

bool Dominates(const Polynomial& g, const Polynomial& h) {
  if (g.nvars() != h.nvars()) throw DimensionError("dominates: dimension mismatch");
  const Polynomial diff = h - g;
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [](const auto& term) { return term.second >= 0; });
}

}  // namespace invsp
