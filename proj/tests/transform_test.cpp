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

#include <gtest/gtest.h>

#include "invsp/construct.hpp"
#include "support/test_support.hpp"

namespace invsp {
namespace {

using testing::Gen;
using testing::kCases;

const std::vector<GroupSpec>& SmallGroups() {
  static const std::vector<GroupSpec> groups = {GroupSpec::Gamma7(), GroupSpec::Weighted(5, 2),
                                                GroupSpec::Weighted(7, 2), GroupSpec::Scalar(3, 2),
                                                GroupSpec::Scalar(4, 1)};
  return groups;
}

// Random sub-polynomial of f with each kept coefficient scaled into (0, 1].
Polynomial Dominated(Gen& gen, const Polynomial& f) {
  Polynomial h(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (gen.Coin()) h.AddTerm(m, c * Rational(gen.Int(1, 4)) / 4);
  }
  return h;
}

Monomial TopMonomial(const Polynomial& f) {
  Monomial best = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > best.degree()) best = m;
  }
  return best;
}

TEST(TensorStepTest, ExplicitSmallCase) {
  const GroupSpec g = GroupSpec::Weighted(3, 2);
  const Polynomial f = BasicPolynomial(g);  // x^3 + 3xy + y^3
  const Polynomial h = Polynomial::Term(Monomial{1, 1}, 1);
  const Polynomial big = TensorStep(f, h);
  EXPECT_EQ(big.term_count(), 6u);
  EXPECT_EQ(big.coefficient(Monomial{1, 4}), 1);
  EXPECT_EQ(big.coefficient(Monomial{1, 1}), 2);
  EXPECT_EQ(big.coefficient(Monomial{4, 1}), 1);
  EXPECT_EQ(big.coefficient(Monomial{2, 2}), 3);
  EXPECT_TRUE(ValidateSpecial(g, big).is_special());
}

TEST(ValidateSpecialTest, ReportsEachFailure) {
  const GroupSpec g = GroupSpec::Weighted(5, 2);
  const Polynomial f = BasicPolynomial(g);
  SpecialReport ok = ValidateSpecial(g, f);
  EXPECT_TRUE(ok.is_special());
  EXPECT_EQ(ok.n_terms, 4u);
  EXPECT_EQ(ok.degree, 5);

  const SpecialReport not_inv = ValidateSpecial(g, f + Polynomial::Term(Monomial{1, 0}, 1));
  EXPECT_FALSE(not_inv.invariant);
  EXPECT_FALSE(not_inv.constant_on_hyperplane);

  const SpecialReport neg = ValidateSpecial(g, TensorStep(f, Polynomial::Term(Monomial{5, 0}, -1)));
  EXPECT_TRUE(neg.invariant);
  EXPECT_TRUE(neg.constant_on_hyperplane);
  EXPECT_FALSE(neg.nonneg);

  const SpecialReport shifted = ValidateSpecial(g, f + Polynomial::Constant(2, 1) - Polynomial::Term(Monomial{5, 0}, 1));
  EXPECT_FALSE(shifted.zero_at_origin);
  EXPECT_FALSE(shifted.is_special());

  EXPECT_FALSE(ValidateSpecial(g, Polynomial(2)).is_special());
  EXPECT_THROW(ValidateSpecial(g, Polynomial::Variable(3, 0)), DimensionError);
}

TEST(DegreeBoundTest, Values) {
  EXPECT_EQ(DegreeBound(2, 7), 11);
  EXPECT_EQ(DegreeBound(2, 2), 1);
  EXPECT_EQ(DegreeBound(3, 17), 8);
  EXPECT_EQ(DegreeBound(3, 29), 14);
  EXPECT_EQ(DegreeBound(3, 30), 14);
  EXPECT_THROW(DegreeBound(1, 4), UnsupportedError);
  EXPECT_THROW(DegreeBound(2, 0), UnsupportedError);
}

TEST(ExactDivideTest, DividesAndRejectsRemainders) {
  const Polynomial x = Polynomial::Variable(2, 0);
  const Polynomial y = Polynomial::Variable(2, 1);
  EXPECT_EQ(ExactDivide(x * x - y * y, x - y), x + y);
  EXPECT_THROW(ExactDivide(x * x + y, x - y), Error);
  EXPECT_THROW(ExactDivide(x, Polynomial(2)), Error);
}

TEST(QuotientHTest, RejectsNonTensorInput) {
  const GroupSpec g = GroupSpec::Weighted(5, 2);
  EXPECT_THROW(QuotientH(g, BasicPolynomial(g) + Polynomial::Term(Monomial{2, 0}, 1)), Error);
  EXPECT_TRUE(QuotientH(g, BasicPolynomial(g)).is_zero());
}

// ---- properties --------------------------------------------------------

TEST(TensorProperty, PreservesConstancyAndInvariance) {
  Gen gen(31);
  for (int i = 0; i < kCases; ++i) {
    const GroupSpec& g = SmallGroups()[i % SmallGroups().size()];
    const Polynomial f = BasicPolynomial(g);
    const std::vector<Monomial> inv = EnumerateInvariantMonomials(g, 2 * g.order());
    const Polynomial h = gen.RandomOver(g.source_dim(), inv, 4, false);
    const Polynomial big = TensorStep(f, h);
    SCOPED_TRACE(g.ToString() + " H=" + h.ToString());
    ASSERT_EQ(big, f - h + h * f);
    const SpecialReport rep = ValidateSpecial(g, big);
    ASSERT_TRUE(rep.invariant);
    ASSERT_TRUE(rep.constant_on_hyperplane);
    ASSERT_TRUE(rep.zero_at_origin);
  }
}

TEST(TensorProperty, DominatedStepStaysSpecial) {
  Gen gen(32);
  for (int i = 0; i < kCases; ++i) {
    const GroupSpec& g = SmallGroups()[i % SmallGroups().size()];
    const Polynomial f = BasicPolynomial(g);
    const Polynomial h = Dominated(gen, f);
    ASSERT_TRUE(ValidateSpecial(g, TensorStep(f, h)).is_special()) << g.ToString() << " H=" << h.ToString();
  }
}

TEST(TensorProperty, QuotientRecoversH) {
  Gen gen(33);
  for (int i = 0; i < kCases; ++i) {
    const GroupSpec& g = SmallGroups()[i % SmallGroups().size()];
    const std::vector<Monomial> inv = EnumerateInvariantMonomials(g, g.order() + 3);
    const Polynomial h = gen.RandomOver(g.source_dim(), inv, 4, false);
    ASSERT_EQ(QuotientH(g, TensorStep(BasicPolynomial(g), h)), h) << g.ToString();
  }
}

// With H = F + ... + F^{k-1} the step telescopes to F^k, for any F.
TEST(TensorProperty, PowerTelescopes) {
  Gen gen(34);
  for (int i = 0; i < kCases; ++i) {
    const int n = 1 + i % 3;
    const Polynomial f = gen.RandomPoly(n, 3, 3);
    const unsigned k = 3 + static_cast<unsigned>(i % 2);
    Polynomial h(n);
    for (unsigned j = 1; j < k; ++j) h += f.Pow(j);
    ASSERT_EQ(TensorStep(f, h), f.Pow(k)) << f.ToString();
  }
}

TEST(TensorTest, BasicPowersAreSpecial) {
  for (const GroupSpec& g : {GroupSpec::Weighted(5, 2), GroupSpec::Scalar(3, 2), GroupSpec::Gamma7()}) {
    const Polynomial f = BasicPolynomial(g);
    for (unsigned k : {3u, 4u}) {
      Polynomial h(f.nvars());
      for (unsigned j = 1; j < k; ++j) h += f.Pow(j);
      const Polynomial big = TensorStep(f, h);
      EXPECT_EQ(big, f.Pow(k));
      EXPECT_TRUE(ValidateSpecial(g, big).is_special()) << g.ToString() << " k=" << k;
      EXPECT_EQ(QuotientH(g, big), h);
    }
  }
}

// Taking H as lambda times the top term of f: lambda = 1 cancels that term
// and gives 2N - 1 terms, lambda = 1/2 keeps it and gives 2N.
TEST(TensorProperty, TopTermScaling) {
  Gen gen(35);
  for (int i = 0; i < kCases; ++i) {
    const GroupSpec& g = SmallGroups()[i % SmallGroups().size()];
    const Polynomial f = TensorStep(BasicPolynomial(g), Dominated(gen, BasicPolynomial(g)));
    ASSERT_TRUE(ValidateSpecial(g, f).is_special());
    const Monomial top = TopMonomial(f);
    const Rational a = f.coefficient(top);
    const std::size_t n = f.term_count();
    const Polynomial whole = TensorStep(f, Polynomial::Term(top, a));
    const Polynomial half = TensorStep(f, Polynomial::Term(top, a / 2));
    ASSERT_EQ(whole.term_count(), 2 * n - 1);
    ASSERT_EQ(half.term_count(), 2 * n);
    ASSERT_TRUE(ValidateSpecial(g, whole).is_special());
    ASSERT_TRUE(ValidateSpecial(g, half).is_special());
  }
}

// (1+t)^m p(t) with p = 1 + sum c_j t^j, k of the c_j positive: the support
// is a sumset of [0, m] with a (k+1)-set, so at least m + k + 1 terms, with
// equality when the support of p is an interval.
TEST(UnivariateProperty, SumsetLowerBound) {
  Gen gen(36);
  const Polynomial t = Polynomial::Variable(1, 0);
  const Polynomial one = Polynomial::Constant(1, 1);
  for (int i = 0; i < kCases; ++i) {
    const unsigned m = static_cast<unsigned>(gen.Int(1, 8));
    Polynomial p = one;
    int k = 0;
    const int top = gen.Int(1, 10);
    bool interval = true;
    for (int j = 1; j <= top; ++j) {
      if (gen.Coin(0.6)) {
        p += Polynomial::Term(Monomial{static_cast<unsigned>(j)}, gen.PositiveRational());
        if (k + 1 != j) interval = false;
        ++k;
      }
    }
    const std::size_t n = ((one + t).Pow(m) * p).term_count();
    ASSERT_GE(n, m + 1 + static_cast<std::size_t>(k)) << p.ToString();
    if (interval) {
      ASSERT_EQ(n, m + 1 + static_cast<std::size_t>(k));
    }
    ASSERT_EQ((one + t).Pow(m + k).term_count(), m + k + 1);
  }
}

}  // namespace
}  // namespace invsp
