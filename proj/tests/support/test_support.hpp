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

// Random generators and brute-force oracles shared by the test binaries.
// Nothing here calls into the code under test beyond the value types.

#ifndef INVSP_TESTS_SUPPORT_TEST_SUPPORT_HPP_
#define INVSP_TESTS_SUPPORT_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "invsp/polynomial.hpp"
#include "invsp/rational.hpp"

namespace invsp::testing {

inline constexpr int kCases = 1000;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational SmallRational(int num_abs = 9, int den_max = 5) {
    Rational q(Int(-num_abs, num_abs), Int(1, den_max));
    q.canonicalize();
    return q;
  }
  Rational PositiveRational(int num_max = 9, int den_max = 5) {
    Rational q(Int(1, num_max), Int(1, den_max));
    q.canonicalize();
    return q;
  }

  Monomial RandomMonomial(int nvars, int max_deg) {
    std::vector<unsigned> e(nvars, 0);
    int left = Int(0, max_deg);
    for (int i = 0; i < nvars && left > 0; ++i) {
      const int take = (i == nvars - 1) ? left : Int(0, left);
      e[i] = static_cast<unsigned>(take);
      left -= take;
    }
    std::shuffle(e.begin(), e.end(), rng_);
    return Monomial::FromSpan(e);
  }

  Polynomial RandomPoly(int nvars, int max_deg, int max_terms, bool nonneg = false) {
    Polynomial p(nvars);
    const int n = Int(0, max_terms);
    for (int i = 0; i < n; ++i) {
      p.AddTerm(RandomMonomial(nvars, max_deg), nonneg ? PositiveRational() : SmallRational());
    }
    return p;
  }

  // Random combination of the given monomials.
  Polynomial RandomOver(int nvars, std::span<const Monomial> support, int max_terms, bool nonneg) {
    Polynomial p(nvars);
    if (support.empty()) return p;
    const int n = Int(0, max_terms);
    for (int i = 0; i < n; ++i) {
      p.AddTerm(support[Int(0, static_cast<int>(support.size()) - 1)], nonneg ? PositiveRational() : SmallRational());
    }
    return p;
  }

  std::vector<Rational> RandomPoint(int n) {
    std::vector<Rational> pt(n);
    for (auto& q : pt) q = SmallRational(7, 4);
    return pt;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Direct evaluation from the term map.
inline Rational Eval(const Polynomial& p, std::span<const Rational> pt) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (int i = 0; i < m.nvars(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) v *= pt[i];
    }
    total += v;
  }
  return total;
}

// Exponent tuples with total degree <= d in n variables whose weighted sum
// vanishes mod the order; computed by plain nested loops.
inline std::vector<std::vector<unsigned>> InvariantExponents(const std::vector<int>& weights, int order, int max_deg) {
  std::vector<std::vector<unsigned>> out;
  const int n = static_cast<int>(weights.size());
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      long s = 0;
      int deg = 0;
      for (int k = 0; k < n; ++k) {
        s += static_cast<long>(weights[k]) * e[k];
        deg += static_cast<int>(e[k]);
      }
      if (deg > 0 && s % order == 0) out.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = static_cast<unsigned>(v);
      self(self, i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_deg);
  return out;
}

inline std::vector<Monomial> InvariantMonomialsOracle(const std::vector<int>& weights, int order, int max_deg) {
  std::vector<Monomial> out;
  for (const auto& e : InvariantExponents(weights, order, max_deg)) out.push_back(Monomial::FromSpan(e));
  return out;
}

// A linear form keyed by parameter letter; "" is the constant.
using NamedForm = std::map<std::string, Rational>;

// Parses "7+7U+14B", "14U-V+7", "7-B", "0". Letters are single upper-case
// characters.
NamedForm ParseNamedForm(const std::string& text);

// a + 7b + 14c with each argument parsed by ParseNamedForm.
NamedForm Phi(const std::string& a, const std::string& b, const std::string& c);

std::string FormString(const NamedForm& f);

}  // namespace invsp::testing

#endif  // INVSP_TESTS_SUPPORT_TEST_SUPPORT_HPP_
