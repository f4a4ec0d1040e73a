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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "invsp/transform.hpp"
#include "support/test_support.hpp"

namespace invsp {
namespace {

using testing::Gen;
using testing::kCases;

Polynomial P2(std::initializer_list<std::tuple<long, unsigned, unsigned>> terms) {
  Polynomial p(2);
  for (const auto& [c, a, b] : terms) p.AddTerm(Monomial{a, b}, Rational(c));
  return p;
}

Polynomial Gamma7Literal() {
  Polynomial p(3);
  auto add = [&](long c, unsigned a, unsigned b, unsigned d) { p.AddTerm(Monomial{a, b, d}, Rational(c)); };
  add(1, 7, 0, 0);
  add(1, 0, 7, 0);
  add(1, 0, 0, 7);
  add(14, 3, 2, 0);
  add(14, 2, 0, 3);
  add(14, 0, 3, 2);
  add(14, 1, 1, 1);
  add(7, 5, 1, 0);
  add(7, 1, 0, 5);
  add(7, 0, 5, 1);
  add(7, 1, 3, 0);
  add(7, 3, 0, 1);
  add(7, 0, 1, 3);
  add(7, 1, 2, 4);
  add(7, 2, 4, 1);
  add(7, 4, 1, 2);
  add(7, 2, 2, 2);
  return p;
}

double EvalDouble(const Polynomial& p, const std::vector<double>& pt) {
  double s = 0;
  for (const auto& [m, c] : p.terms()) {
    double v = c.get_d();
    for (int i = 0; i < m.nvars(); ++i) v *= std::pow(pt[i], m[i]);
    s += v;
  }
  return s;
}

// 1 - prod_{j=0}^{p-1} (1 - sum_i omega^{w_i j} x_i) in complex doubles.
double ProductOracle(int p, const std::vector<int>& weights, const std::vector<double>& pt) {
  std::complex<double> prod = 1;
  for (int j = 0; j < p; ++j) {
    std::complex<double> factor = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      factor -= std::polar(1.0, 2 * std::numbers::pi * weights[i] * j / p) * pt[i];
    }
    prod *= factor;
  }
  return 1.0 - prod.real();
}

TEST(CoefficientCTest, KnownValues) {
  EXPECT_EQ(CoefficientC(5, 1), 11);
  EXPECT_EQ(CoefficientC(5, 2), 44);
  EXPECT_EQ(CoefficientC(5, 3), 77);
  EXPECT_EQ(CoefficientC(5, 4), 55);
  EXPECT_EQ(CoefficientC(5, 5), 11);
  EXPECT_EQ(CoefficientC(1, 1), 3);
}

TEST(BasicPolyTest, SmallClosedForms) {
  EXPECT_EQ(BasicPolyClosed(GroupSpec::Weighted(3, 2)), P2({{1, 3, 0}, {3, 1, 1}, {1, 0, 3}}));
  EXPECT_EQ(BasicPolyClosed(GroupSpec::Weighted(5, 2)), P2({{1, 5, 0}, {5, 3, 1}, {5, 1, 2}, {1, 0, 5}}));
  EXPECT_EQ(BasicPolyClosed(GroupSpec::Scalar(3, 2)), P2({{1, 3, 0}, {3, 2, 1}, {3, 1, 2}, {1, 0, 3}}));
  EXPECT_EQ(BasicPolyClosed(GroupSpec::Scalar(4, 1)), Polynomial::Term(Monomial{4}, 1));
}

TEST(BasicPolyTest, ElevenTermFixture) {
  const Polynomial f = BasicPolyClosed(GroupSpec::Weighted(11, 2));
  EXPECT_EQ(f, P2({{1, 11, 0}, {1, 0, 11}, {11, 9, 1}, {44, 7, 2}, {77, 5, 3}, {55, 3, 4}, {11, 1, 5}}));
  EXPECT_EQ(f.term_count(), 7u);
}

TEST(BasicPolyTest, Gamma7BothWays) {
  EXPECT_EQ(BasicPolyClosed(GroupSpec::Gamma7()), Gamma7Literal());
  const Polynomial prod = BasicPolyProduct(7, GroupSpec::Gamma7().weights());
  EXPECT_EQ(prod, Gamma7Literal());
  EXPECT_EQ(prod.term_count(), 17u);
}

class DualConstruction : public ::testing::TestWithParam<int> {};

TEST_P(DualConstruction, ProductEqualsClosedForm) {
  const int p = GetParam();
  const GroupSpec g = GroupSpec::Weighted(p, 2);
  const Polynomial closed = BasicPolyClosed(g);
  EXPECT_EQ(BasicPolyProduct(p, g.weights()), closed);
  EXPECT_EQ(closed.term_count(), static_cast<std::size_t>(g.r() + 2));
  EXPECT_TRUE(ValidateSpecial(g, closed).is_special());
}

INSTANTIATE_TEST_SUITE_P(Primes, DualConstruction, ::testing::Values(3, 5, 7, 11, 13, 17, 19));

TEST(BasicPolyTest, ProductHandlesOtherWeights) {
  const GroupSpec g = GroupSpec::Weighted(7, 3);
  const Polynomial f = BasicPolyProduct(7, g.weights());
  // Invariant and 1 on the line, but x^2 y^4 comes out with coefficient -7.
  const SpecialReport rep = ValidateSpecial(g, f);
  EXPECT_TRUE(rep.invariant);
  EXPECT_TRUE(rep.constant_on_hyperplane);
  EXPECT_FALSE(rep.nonneg);
  EXPECT_EQ(f.coefficient(Monomial{2, 4}), -7);
  EXPECT_EQ(BasicPolynomial(g), f);
  EXPECT_THROW(BasicPolyClosed(g), UnsupportedError);
  EXPECT_THROW(BasicPolyProduct(9, std::vector<int>{1, 2}), UnsupportedError);
  EXPECT_THROW(BasicPolyProduct(7, std::vector<int>{7, 1}), UnsupportedError);
}

TEST(ModReductionTest, IffPrime) {
  for (int r = 1; 2 * r + 1 <= 45; ++r) {
    EXPECT_EQ(ModReductionCheck(r), IsPrime(2 * r + 1)) << "r=" << r;
  }
}

TEST(IsPrimeTest, Small) {
  EXPECT_FALSE(IsPrime(1));
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(43));
  EXPECT_FALSE(IsPrime(45));
  EXPECT_FALSE(IsPrime(49));
}

// ---- properties --------------------------------------------------------

TEST(ProductOracleProperty, ClosedFormsMatchComplexProduct) {
  Gen gen(21);
  const std::vector<GroupSpec> groups = {GroupSpec::Weighted(3, 2), GroupSpec::Weighted(7, 2),
                                         GroupSpec::Weighted(13, 2), GroupSpec::Scalar(5, 2), GroupSpec::Gamma7()};
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int i = 0; i < kCases; ++i) {
    const GroupSpec& g = groups[i % groups.size()];
    std::vector<double> pt(g.source_dim());
    for (double& v : pt) v = u(gen.rng());
    const double want = ProductOracle(g.order(), g.weights(), pt);
    const double got = EvalDouble(BasicPolyClosed(g), pt);
    ASSERT_NEAR(got, want, 1e-9 * (1 + std::abs(want))) << g.ToString();
  }
}

TEST(ProductOracleProperty, RadicalFormulaAgrees) {
  Gen gen(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < kCases; ++i) {
    const int r = 1 + i % 8;
    const double x = u(gen.rng());
    const double y = u(gen.rng());
    const double want = EvalDouble(BasicPolyClosed(GroupSpec::Weighted(2 * r + 1, 2)), {x, y});
    ASSERT_NEAR(RadicalFormulaEval(r, x, y), want, 1e-9 * (1 + std::abs(want)));
  }
}

TEST(CyclotomicProperty, FieldArithmetic) {
  Gen gen(23);
  for (int i = 0; i < kCases; ++i) {
    const int p = std::vector<int>{3, 5, 7, 11}[i % 4];
    auto random_element = [&] {
      CyclotomicElement e(p);
      for (int k = 0; k < p; ++k) e += CyclotomicElement::RootPower(p, k) * CyclotomicElement::FromRational(p, gen.SmallRational());
      return e;
    };
    const CyclotomicElement a = random_element();
    const CyclotomicElement b = random_element();
    const CyclotomicElement c = random_element();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    const long s = gen.Int(-30, 30);
    const long t = gen.Int(-30, 30);
    ASSERT_EQ(CyclotomicElement::RootPower(p, s) * CyclotomicElement::RootPower(p, t),
              CyclotomicElement::RootPower(p, s + t));
  }
}

TEST(CyclotomicTest, RootsSumToZero) {
  for (int p : {3, 5, 7, 11, 13}) {
    CyclotomicElement sum(p);
    for (int k = 0; k < p; ++k) sum += CyclotomicElement::RootPower(p, k);
    EXPECT_TRUE(sum.is_zero()) << p;
    EXPECT_TRUE(CyclotomicElement::FromRational(p, Rational(3, 2)).is_rational());
    EXPECT_FALSE(CyclotomicElement::RootPower(p, 1).is_rational());
    EXPECT_THROW(CyclotomicElement::RootPower(p, 1).rational_value(), ConsistencyError);
  }
}

}  // namespace
}  // namespace invsp
