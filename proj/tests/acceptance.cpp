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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "invsp/affine_family.hpp"
#include "invsp/cli.hpp"
#include "invsp/construct.hpp"
#include "invsp/gapsearch.hpp"
#include "invsp/json_io.hpp"
#include "invsp/transform.hpp"
#include "support/tables.hpp"
#include "support/test_support.hpp"

namespace invsp {
namespace {

using testing::Eval;
using testing::Gen;
using testing::kCases;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Fails the criterion with a note; returns cond for chaining.
bool Check(Verdict& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
  return cond;
}

Polynomial Literal(int nvars, std::initializer_list<std::pair<std::vector<unsigned>, long>> terms) {
  Polynomial p(nvars);
  for (const auto& [e, c] : terms) p.AddTerm(Monomial::FromSpan(e), Rational(c));
  return p;
}

Verdict DualConstruction() {
  Verdict o;
  for (int p : {3, 5, 7, 11, 13, 17, 19}) {
    const GroupSpec g = GroupSpec::Weighted(p, 2);
    Check(o, BasicPolyProduct(p, g.weights()) == BasicPolyClosed(g), "p=" + std::to_string(p));
  }
  const Polynomial f7 = Literal(3, {{{7, 0, 0}, 1},  {{0, 7, 0}, 1},  {{0, 0, 7}, 1},  {{3, 2, 0}, 14}, {{2, 0, 3}, 14},
                                    {{0, 3, 2}, 14}, {{1, 1, 1}, 14}, {{5, 1, 0}, 7},  {{1, 0, 5}, 7},  {{0, 5, 1}, 7},
                                    {{1, 3, 0}, 7},  {{3, 0, 1}, 7},  {{0, 1, 3}, 7},  {{1, 2, 4}, 7},  {{2, 4, 1}, 7},
                                    {{4, 1, 2}, 7},  {{2, 2, 2}, 7}});
  const GroupSpec g7 = GroupSpec::Gamma7();
  Check(o, BasicPolyProduct(7, g7.weights()) == f7, "gamma7 product");
  Check(o, BasicPolyClosed(g7) == f7, "gamma7 closed");
  Check(o, f7.term_count() == 17, "gamma7 17 terms");
  return o;
}

Verdict ElevenFixture() {
  Verdict o;
  const Polynomial want = Literal(
      2, {{{11, 0}, 1}, {{0, 11}, 1}, {{9, 1}, 11}, {{7, 2}, 44}, {{5, 3}, 77}, {{3, 4}, 55}, {{1, 5}, 11}});
  const Polynomial f = BasicPolyClosed(GroupSpec::Weighted(11, 2));
  Check(o, f == want, "f11 = " + f.ToString());
  Check(o, f.term_count() == 7, "N = " + std::to_string(f.term_count()));
  return o;
}

Verdict Primality() {
  Verdict o;
  for (int r = 1; 2 * r + 1 <= 45; ++r) {
    Check(o, ModReductionCheck(r) == IsPrime(2 * r + 1), "r=" + std::to_string(r));
  }
  return o;
}

Verdict WeightedGaps() {
  Verdict o;
  for (int r = 1; r <= 5; ++r) {
    const GroupSpec g = GroupSpec::Weighted(2 * r + 1, 2);
    const std::string tag = "r=" + std::to_string(r) + ": ";
    // Values up to 3 N(F) seed a closure run long enough to propagate.
    const AchievabilityReport rep = AchievableSet(g, 4 * r + 1, SignMode::kNonnegH, {}, 3 * (r + 2));
    if (!Check(o, rep.exhaustive, tag + "sweep not exhaustive")) continue;
    Check(o, !rep.achievable.empty() && rep.achievable.begin()->first == r + 2, tag + "minimum");
    int min_degree_hits = 0;
    for (const auto& [deg, vals] : rep.by_degree) min_degree_hits += vals.count(r + 2);
    Check(o, min_degree_hits == 1 && rep.achievable.count(r + 2) && rep.achievable.at(r + 2).h.is_zero(),
          tag + "minimum only from H = 0");
    for (int v = r + 3; v <= 2 * r + 2; ++v) {
      Check(o, !rep.achievable.count(v) && v <= rep.certified_up_to, tag + "gap " + std::to_string(v));
    }
    std::map<int, Polynomial> base;
    for (int v : {2 * r + 3, 2 * r + 4}) {
      auto it = rep.achievable.find(v);
      if (!Check(o, it != rep.achievable.end(), tag + "missing " + std::to_string(v))) continue;
      Check(o, ValidateSpecial(g, it->second.g).is_special() && it->second.g.term_count() == static_cast<std::size_t>(v),
            tag + "witness " + std::to_string(v));
    }
    for (const auto& [v, w] : rep.achievable) base[v] = w.g;
    const int bound = 10 * (r + 2);
    const FrobeniusClosure cl = ComputeFrobeniusClosure(base, bound);
    for (int v = 2 * r + 3; v <= bound; ++v) {
      if (!Check(o, cl.Contains(v), tag + "closure misses " + std::to_string(v))) break;
      const Polynomial p = cl.Materialize(v);
      Check(o, ValidateSpecial(g, p).is_special() && p.term_count() == static_cast<std::size_t>(v),
            tag + "closure witness " + std::to_string(v));
    }
  }
  return o;
}

Verdict GammaFixtures() {
  Verdict o;
  std::set<int> values;
  int count = 0;
  for (const Fixture& fx : Fixtures()) {
    if (!(fx.group == GroupSpec::Gamma7())) continue;
    ++count;
    const FixtureResult res = VerifyFixture(fx);
    Check(o, res.passed, fx.key + ": " + res.diff);
    if (fx.key.rfind("gamma7.list.", 0) == 0) values.insert(fx.expected_n);
    if (fx.key == "gamma7.list.n41") {
      const Polynomial g = TensorStep(BasicPolynomial(fx.group), fx.h);
      Check(o, g.coefficient(Monomial{2, 2, 2}) == 0, "n41 x^2y^2z^2 does not cancel");
    }
  }
  std::set<int> want = {17, 29, 30, 32, 33, 34};
  for (int v = 37; v <= 57; ++v) want.insert(v);
  Check(o, values == want, "list values");
  Check(o, count == 28, "expected 27 list items plus the alternate, got " + std::to_string(count));
  return o;
}

Verdict GammaLowDegree() {
  Verdict o;
  const AchievabilityReport rep = AchievableSet(GroupSpec::Gamma7(), 13, SignMode::kNonnegH, {}, 36);
  if (!Check(o, rep.exhaustive, "degree-13 sweep not exhaustive")) return o;
  for (const auto& [deg, vals] : rep.by_degree) {
    if (deg <= 9) Check(o, deg == 7 && vals == std::set<int>{17}, "degree " + std::to_string(deg));
  }
  auto at = [&](int d) { return rep.by_degree.count(d) ? rep.by_degree.at(d) : std::set<int>{}; };
  Check(o, at(10) == std::set<int>({29, 30}), "degree 10");
  Check(o, !at(11).empty() && *at(11).begin() >= 31, "degree 11 minimum");
  Check(o, !at(12).empty() && *at(12).begin() >= 33, "degree 12 minimum");
  for (int v = 18; v <= 28; ++v) {
    Check(o, !rep.achievable.count(v) && v <= rep.certified_up_to, "gap " + std::to_string(v));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("work ") + std::to_string(rep.stats.work);
  return o;
}

Verdict TableFidelity() {
  Verdict o;
  const GroupSpec g = GroupSpec::Gamma7();
  for (const auto& [hd, table] : {std::pair{4, testing::DegreeElevenTable()}, std::pair{6, testing::DegreeThirteenTable()}}) {
    const AffineFamily fam = BuildCoefficientFamily(g, hd, SignMode::kNonnegH);
    for (const std::string& m : testing::TableMismatches(fam, table)) Check(o, false, m);
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(table.size()) + " entries";
  }
  return o;
}

AffineFamily SparsityExample(SlotSign sign) {
  AffineFamily fam;
  fam.slot_sign = sign;
  for (const char* n : {"A", "B", "C"}) fam.params.push_back(Parameter{n, std::nullopt, std::nullopt, std::nullopt});
  const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> rows = {
      {1, {{0, -1}}}, {2, {{1, -1}}}, {1, {{2, -1}}}, {0, {{0, 1}}}, {0, {{0, 2}, {1, 1}}},
      {0, {{0, 1}, {1, 2}, {2, 1}}}, {0, {{1, 1}, {2, 2}}}, {0, {{2, 1}}}};
  for (const auto& [c, w] : rows) {
    Slot s;
    s.label = "w" + std::to_string(fam.slots.size() + 1);
    s.form.constant = c;
    for (const auto& [k, v] : w) s.form.AddWeight(k, v);
    fam.slots.push_back(std::move(s));
  }
  return fam;
}

Verdict SparsityExampleCheck() {
  Verdict o;
  const AffineFamily w = SparsityExample(SlotSign::kFree);
  auto l0 = [&](int a, int b, int c) {
    int n = 0;
    for (const Rational& v : EvaluateSlots(w, std::vector<Rational>{a, b, c})) n += v != 0;
    return n;
  };
  Check(o, l0(0, 0, 0) == 3, "W(0,0,0)");
  Check(o, l0(1, -2, 1) == 4, "W(1,-2,1)");
  Check(o, l0(1, 2, 1) == 5, "W(1,2,1)");
  const L0Range free_range = ComputeL0Range(w);
  Check(o, free_range.exhaustive && !free_range.Contains(1) && !free_range.Contains(2), "1 and 2 excluded");
  Check(o, free_range.Contains(3) && free_range.Contains(4) && free_range.Contains(5), "3, 4, 5 reached");
  const L0Range orthant = ComputeL0Range(SparsityExample(SlotSign::kNonneg));
  Check(o, orthant.exhaustive && !orthant.Contains(4), "4 excluded on the orthant");
  return o;
}

Verdict Properties() {
  Verdict o;
  Gen gen(2026);
  const std::vector<GroupSpec> groups = {GroupSpec::Gamma7(), GroupSpec::Weighted(5, 2), GroupSpec::Scalar(3, 2)};
  int fails[7] = {0, 0, 0, 0, 0, 0, 0};
  const Polynomial t = Polynomial::Variable(1, 0);
  const Polynomial one = Polynomial::Constant(1, 1);
  for (int i = 0; i < kCases; ++i) {
    const int n = 1 + i % 3;
    // Disjoint supports add term counts.
    const Polynomial a = gen.RandomPoly(n, 5, 6);
    const Polynomial shifted = gen.RandomPoly(n, 5, 6).MultiplyMonomial(Monomial(n).with(0, a.degree() + 1), 1);
    fails[0] += (a + shifted).term_count() != a.term_count() + shifted.term_count();
    // Tensor step keeps invariance and the value on the hyperplane.
    const GroupSpec& g = groups[i % groups.size()];
    const Polynomial f = BasicPolynomial(g);
    const std::vector<Monomial> inv = EnumerateInvariantMonomials(g, g.order() + 3);
    const Polynomial h = gen.RandomOver(g.source_dim(), inv, 4, false);
    const SpecialReport rep = ValidateSpecial(g, TensorStep(f, h));
    fails[1] += !(rep.invariant && rep.constant_on_hyperplane);
    // (1+t)^m p with k positive coefficients.
    const unsigned m = static_cast<unsigned>(gen.Int(1, 8));
    Polynomial p = one;
    std::size_t k = 0;
    for (int j = 1; j <= 10; ++j) {
      if (gen.Coin()) {
        p += Polynomial::Term(Monomial{static_cast<unsigned>(j)}, gen.PositiveRational());
        ++k;
      }
    }
    fails[2] += ((one + t).Pow(m) * p).term_count() < m + 1 + k;
    fails[3] += (one + t).Pow(m + k).term_count() != m + k + 1;
    // Quotient round trip.
    fails[4] += QuotientH(g, TensorStep(f, h)) != h;
    // Restriction against evaluation on the hyperplane.
    std::vector<Rational> pt = gen.RandomPoint(n);
    Rational last = 1;
    for (int v = 0; v + 1 < n; ++v) last -= pt[v];
    pt[n - 1] = last;
    const std::vector<Rational> head(pt.begin(), pt.end() - 1);
    const Polynomial b = gen.RandomPoly(n, 4, 5);
    fails[5] += Eval(RestrictToHyperplane(a * b), head) != Eval(a * b, pt) ||
                RestrictToHyperplane(a * b) != RestrictToHyperplane(a) * RestrictToHyperplane(b);
    // Telescoping to F^k.
    const Polynomial q = gen.RandomPoly(n, 3, 3);
    const unsigned kk = 3 + static_cast<unsigned>(i % 2);
    Polynomial hh(n);
    for (unsigned j = 1; j < kk; ++j) hh += q.Pow(j);
    fails[6] += TensorStep(q, hh) != q.Pow(kk);
  }
  const char* names[7] = {"disjoint additivity", "tensor constancy", "N(Fp) bound", "binomial equality",
                          "quotient round trip", "restriction", "telescoping"};
  for (int s = 0; s < 7; ++s) Check(o, fails[s] == 0, std::string(names[s]) + " failed " + std::to_string(fails[s]));
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(kCases) + " cases x 7";
  return o;
}

Verdict ScopeHonesty() {
  Verdict o;
  unsetenv("INVSP_BUDGET");
  std::istringstream in;
  std::ostringstream out13, out17, err;
  const int c13 = cli::Run({"gaps", "--group", "gamma7", "--max-degree", "13", "--targets", "31,35,36"}, in, out13, err);
  Check(o, c13 == cli::kOk, "degree 13 exit " + std::to_string(c13));
  if (c13 == cli::kOk) {
    const Json j = ParseJson(out13.str());
    for (const Json& t : j["targets"]) Check(o, t["status"] == "no witness, exhaustive", t.dump());
    Check(o, j["targets"].size() == 3, "three targets");
  }
  const int c17 = cli::Run({"gaps", "--group", "gamma7", "--max-degree", "17", "--targets", "31,35,36"}, in, out17, err);
  Check(o, c17 == cli::kBudgetExhausted, "degree 17 exit " + std::to_string(c17));
  return o;
}

}  // namespace
}  // namespace invsp

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<invsp::Verdict()>>> criteria = {
      {"dual construction", invsp::DualConstruction},
      {"eleven-term coefficient fixture", invsp::ElevenFixture},
      {"primality congruence", invsp::Primality},
      {"weighted gap theorem r=1..5", invsp::WeightedGaps},
      {"gamma7 fixture ledger", invsp::GammaFixtures},
      {"gamma7 low-degree structure", invsp::GammaLowDegree},
      {"table fidelity", invsp::TableFidelity},
      {"sparsity example", invsp::SparsityExampleCheck},
      {"property suites", invsp::Properties},
      {"open-problem scope", invsp::ScopeHonesty},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    invsp::Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.detail
              << (o.detail.empty() ? "" : ", ") << secs << " s)\n";
  }
  return failed == 0 ? 0 : 1;
}
