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

#include "invsp/gapsearch.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "invsp/construct.hpp"

namespace invsp {
namespace {

using TermSpec = std::tuple<Rational, unsigned, unsigned, unsigned>;

Polynomial P3(std::initializer_list<TermSpec> terms) {
  Polynomial p(3);
  for (const auto& [c, a, b, d] : terms) p.AddTerm(Monomial{a, b, d}, c);
  return p;
}

Polynomial P2(std::initializer_list<std::tuple<Rational, unsigned, unsigned>> terms) {
  Polynomial p(2);
  for (const auto& [c, a, b] : terms) p.AddTerm(Monomial{a, b}, c);
  return p;
}

std::string Join(const std::set<int>& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lo, hi] : Intervals(values)) {
    if (!first) os << ",";
    first = false;
    os << lo;
    if (hi > lo) os << (hi == lo + 1 ? "," : "..") << hi;
  }
  return os.str();
}

std::vector<Fixture> BuildFixtures() {
  std::vector<Fixture> out;
  const Rational half(1, 2);
  auto g7 = [&](int n, Polynomial h) {
    Fixture f;
    f.key = "gamma7.list.n" + std::to_string(n);
    f.group = GroupSpec::Gamma7();
    f.h = std::move(h);
    f.expected_n = n;
    out.push_back(std::move(f));
  };
  const Rational l14 = 14 * half;
  const Rational l7 = 7 * half;
  g7(17, Polynomial(3));
  g7(29, P3({{14, 1, 1, 1}}));
  g7(30, P3({{l14, 1, 1, 1}}));
  g7(32, P3({{7, 3, 0, 1}}));
  g7(33, P3({{l7, 3, 0, 1}}));
  g7(34, P3({{half, 0, 0, 7}}));
  g7(37, P3({{7, 1, 3, 0}, {14, 1, 1, 1}}));
  g7(38, P3({{7, 1, 3, 0}, {l14, 1, 1, 1}}));
  g7(39, P3({{l7, 1, 3, 0}, {l14, 1, 1, 1}}));
  g7(40, P3({{14, 1, 1, 1}, {14, 3, 2, 0}}));
  g7(41, P3({{14, 1, 1, 1}, {203, 2, 2, 2}}));
  out.back().expected_coefficients.push_back({Monomial{2, 2, 2}, Rational(0)});
  g7(42, P3({{7, 1, 3, 0}, {7, 0, 1, 3}}));
  g7(43, P3({{7, 1, 3, 0}, {14, 1, 1, 1}, {7, 0, 1, 3}}));
  g7(44, P3({{7, 1, 3, 0}, {l14, 1, 1, 1}, {7, 0, 1, 3}}));
  g7(45, P3({{l7, 1, 3, 0}, {l14, 1, 1, 1}, {7, 3, 0, 1}}));
  g7(46, P3({{l7, 1, 3, 0}, {l14, 1, 1, 1}, {l7, 0, 1, 3}}));
  g7(47, P3({{7, 1, 3, 0}, {7, 3, 0, 1}, {14, 1, 1, 1}, {7, 0, 1, 3}}));
  g7(48, P3({{7, 1, 3, 0}, {7, 3, 0, 1}, {l14, 1, 1, 1}, {7, 0, 1, 3}}));
  g7(49, P3({{l7, 1, 3, 0}, {7, 3, 0, 1}, {l14, 1, 1, 1}, {7, 0, 1, 3}}));
  g7(50, P3({{l7, 1, 3, 0}, {7, 3, 0, 1}, {l14, 1, 1, 1}, {l7, 0, 1, 3}}));
  g7(51, P3({{l7, 1, 3, 0}, {l7, 3, 0, 1}, {l14, 1, 1, 1}, {l7, 0, 1, 3}}));
  g7(52, P3({{14, 3, 2, 0}, {7, 1, 3, 0}, {7, 3, 0, 1}, {14, 1, 1, 1}, {l14, 2, 0, 3}}));
  g7(53, P3({{14, 3, 2, 0}, {7, 1, 3, 0}, {7, 3, 0, 1}, {l14, 1, 1, 1}, {l14, 2, 0, 3}}));
  g7(54, P3({{l14, 3, 2, 0}, {7, 1, 3, 0}, {7, 3, 0, 1}, {l14, 1, 1, 1}, {l14, 2, 0, 3}}));
  g7(55, P3({{l14, 3, 2, 0}, {l7, 1, 3, 0}, {7, 3, 0, 1}, {l14, 1, 1, 1}, {l14, 2, 0, 3}}));
  g7(56, P3({{l14, 3, 2, 0}, {l7, 1, 3, 0}, {l7, 3, 0, 1}, {l14, 1, 1, 1}, {l14, 2, 0, 3}}));
  g7(57, P3({{half, 7, 0, 0}, {13, 1, 1, 1}, {182, 2, 2, 2}}));

  Fixture alt;
  alt.key = "gamma7.alternate.n51";
  alt.h = P3({{14, 3, 2, 0}, {7, 1, 3, 0}, {7, 3, 0, 1}, {14, 1, 1, 1}, {14, 2, 0, 3}});
  alt.expected_n = 51;
  out.push_back(std::move(alt));

  Fixture w;
  w.key = "weighted11.three_consecutive.n18";
  w.group = GroupSpec::Weighted(11, 2);
  w.h = P2({{4, 7, 2}, {7, 5, 3}, {5, 3, 4}});
  w.expected_n = 18;
  w.expected_g = P2({{1, 11, 0},  {11, 9, 1},  {40, 7, 2},  {4, 18, 2},  {70, 5, 3},  {51, 16, 3},
                     {50, 3, 4},  {258, 14, 4}, {11, 1, 5},  {671, 12, 5}, {979, 10, 6}, {814, 8, 7},
                     {352, 6, 8}, {55, 4, 9},  {1, 0, 11},  {4, 7, 13},  {7, 5, 14},  {5, 3, 15}});
  out.push_back(std::move(w));

  Fixture s;
  s.key = "scalar2.signed_h.n5";
  s.group = GroupSpec::Scalar(2, 2);
  s.h = P2({{1, 2, 0}, {-1, 1, 1}, {1, 0, 2}});
  s.expected_n = 5;
  s.expected_g = P2({{1, 4, 0}, {3, 1, 1}, {1, 3, 1}, {1, 1, 3}, {1, 0, 4}});
  out.push_back(std::move(s));
  return out;
}

Witness MakeWitness(const GroupSpec& g, const Polynomial& f, const Polynomial& h, int claimed) {
  Witness w;
  w.h = h;
  w.g = TensorStep(f, h);
  w.n_terms = static_cast<int>(w.g.term_count());
  w.g_degree = w.g.degree();
  const SpecialReport rep = ValidateSpecial(g, w.g);
  if (!rep.is_special() || w.n_terms != claimed) {
    throw ConsistencyError("witness for N=" + std::to_string(claimed) + " failed validation: " + rep.ToString());
  }
  return w;
}

int CertifiedUpTo(int n, int degree_bound) {
  if (n == 2) return (degree_bound + 3) / 2;
  if (n == 3) return 2 * degree_bound + 2;
  return -1;
}

void Add(GapTheoremReport& rep, std::string name, bool passed, std::string detail) {
  rep.checks.push_back({std::move(name), passed, std::move(detail)});
}

bool AllIn(const std::set<int>& s, int lo, int hi) {
  for (int v = lo; v <= hi; ++v) {
    if (!s.count(v)) return false;
  }
  return true;
}

bool NoneIn(const std::set<int>& s, int lo, int hi) {
  auto it = s.lower_bound(lo);
  return it == s.end() || *it > hi;
}

std::set<int> Keys(const std::map<int, Witness>& m) {
  std::set<int> out;
  for (const auto& [k, v] : m) out.insert(k);
  return out;
}

void Finish(GapTheoremReport& rep) {
  rep.outcome = Outcome::kVerified;
  for (const auto& c : rep.checks) {
    if (!c.passed) rep.outcome = Outcome::kFailed;
  }
}

// Shared by the two-variable families: minimum N(F) only from H = 0, the
// proven gaps below the first doubled value, and the closure above it.
void CheckTwoVariable(GapTheoremReport& rep, const GroupSpec& g, int n_f, const std::vector<std::pair<int, int>>& gaps,
                      const std::vector<int>& must_have, const GapLimits& limits) {
  const Polynomial f = BasicPolynomial(g);
  const int d = g.family() == GroupFamily::kWeighted ? 4 * g.r() + 1 : 4 * g.order() - 3;
  rep.degree_bound = d;
  // Values up to 3 N(F) give a closure run long enough to propagate.
  const AchievabilityReport ach = AchievableSet(g, d, SignMode::kNonnegH, limits.budget, 3 * n_f);
  if (!ach.exhaustive) {
    Add(rep, "sweep.exhaustive", false, "budget exhausted at degree " + std::to_string(d));
    rep.outcome = Outcome::kInconclusive;
    return;
  }
  const std::set<int> vals = Keys(ach.achievable);
  rep.min_value = vals.empty() ? std::nullopt : std::optional<int>(*vals.begin());
  Add(rep, "minimum.equals_basic_count", rep.min_value == n_f,
      "min " + (rep.min_value ? std::to_string(*rep.min_value) : std::string("none")) + ", N(F) " +
          std::to_string(n_f));
  bool only_from_f = true;
  for (const auto& [deg, vs] : ach.by_degree) {
    if (deg != f.degree() && vs.count(n_f)) only_from_f = false;
    if (deg == f.degree() && vs != std::set<int>{n_f}) only_from_f = false;
  }
  Add(rep, "minimum.only_from_zero_h", only_from_f, "value " + std::to_string(n_f) + " occurs only at degree " +
                                                        std::to_string(f.degree()));
  for (const auto& [lo, hi] : gaps) {
    bool ok = true;
    for (int v = lo; v <= hi; ++v) ok &= ach.proven_gaps.count(v) > 0;
    Add(rep, "gap.[" + std::to_string(lo) + "," + std::to_string(hi) + "]", ok,
        "certified up to N=" + std::to_string(ach.certified_up_to) + " by the sweep to degree " + std::to_string(d));
  }
  for (int v : must_have) {
    Add(rep, "achievable." + std::to_string(v), vals.count(v) > 0, "witness validated end to end");
  }
  std::map<int, Polynomial> base;
  for (const auto& [v, w] : ach.achievable) base.emplace(v, w.g);
  const int bound = limits.closure_factor * n_f;
  const FrobeniusClosure cl = ComputeFrobeniusClosure(base, bound);
  const int first = 2 * n_f - 1;
  const std::set<int> cv = cl.ValueSet();
  bool materialized = true;
  for (int v = first; v <= bound && materialized; ++v) {
    if (!cl.Contains(v)) {
      materialized = false;
      break;
    }
    const Polynomial p = cl.Materialize(v);
    materialized = ValidateSpecial(g, p).is_special() && static_cast<int>(p.term_count()) == v;
  }
  Add(rep, "closure.[" + std::to_string(first) + "," + std::to_string(bound) + "]", materialized,
      "every value constructed and validated");
  rep.frontier = cl.frontier;
  Add(rep, "frontier", cl.frontier == first,
      "frontier " + (cl.frontier ? std::to_string(*cl.frontier) : std::string("none")));
  rep.gap_intervals = Intervals(ach.proven_gaps);
  Finish(rep);
}

}  // namespace

AchievabilityReport AchievableSet(const GroupSpec& g, int degree_bound, SignMode mode, const SearchBudget& budget,
                                  int cap) {
  const Polynomial f = BasicPolynomial(g);
  if (degree_bound < f.degree()) {
    throw Error("degree bound " + std::to_string(degree_bound) + " is below the basic polynomial degree " +
                std::to_string(f.degree()));
  }
  AchievabilityReport rep;
  rep.group = g;
  rep.degree_bound = degree_bound;
  rep.sign_mode = mode;
  rep.cap = cap;
  const AffineFamily fam = BuildCoefficientFamily(g, degree_bound - f.degree(), mode);
  const L0Range range = ComputeL0Range(fam, {cap, budget.max_work, budget.jobs});
  rep.stats = range.stats;
  if (!range.exhaustive) return rep;
  rep.exhaustive = true;
  for (const auto& [v, e] : range.achievable) {
    rep.achievable.emplace(v, MakeWitness(g, f, HFromPoint(fam, e.witness), v));
  }
  for (const auto& [deg, m] : range.by_degree) {
    for (const auto& [v, e] : m) rep.by_degree[deg].insert(v);
  }
  rep.certified_up_to = CertifiedUpTo(g.source_dim(), degree_bound);
  if (cap >= 0 && rep.certified_up_to > cap) rep.certified_up_to = cap;
  for (int v = 1; v <= rep.certified_up_to; ++v) {
    if (!rep.achievable.count(v)) rep.proven_gaps.insert(v);
  }
  if (!rep.achievable.empty()) {
    std::map<int, Polynomial> base;
    for (const auto& [v, w] : rep.achievable) base.emplace(v, w.g);
    rep.frontier = ComputeFrobeniusClosure(base, 4 * rep.achievable.rbegin()->first).frontier;
  }
  return rep;
}

std::set<int> FrobeniusClosure::ValueSet() const {
  std::set<int> out;
  for (const auto& [v, s] : values) out.insert(v);
  return out;
}

Polynomial FrobeniusClosure::Materialize(int v) const {
  auto it = values.find(v);
  if (it == values.end()) throw Error(std::to_string(v) + " is not in the closure");
  if (!it->second) return base.at(v);
  const ClosureStep& step = *it->second;
  Polynomial p = Materialize(step.parent);
  const Polynomial& f = base.at(step.base_value);
  const auto& [m, c] = *p.terms().begin();  // graded order: a term of top degree
  const Monomial mono = m;
  const Rational lambda = step.full ? Rational(1) : Rational(1, 2);
  const Rational coeff = lambda * c;
  p.AddTerm(mono, -coeff);
  p += f.MultiplyMonomial(mono, coeff);
  return p;
}

FrobeniusClosure ComputeFrobeniusClosure(const std::map<int, Polynomial>& base, int bound) {
  FrobeniusClosure cl;
  cl.bound = bound;
  for (const auto& [v, p] : base) {
    if (v < 1) throw Error("closure base values must be positive");
    if (static_cast<int>(p.term_count()) != v) throw Error("closure base witness has the wrong term count");
    cl.base.emplace(v, p);
    if (v <= bound) cl.values.emplace(v, std::nullopt);
  }
  for (int s = 1; s <= bound; ++s) {
    if (!cl.values.count(s)) continue;
    for (const auto& [t, p] : base) {
      if (s + t - 1 <= bound && t > 1) cl.values.try_emplace(s + t - 1, ClosureStep{s, t, true});
      if (s + t <= bound) cl.values.try_emplace(s + t, ClosureStep{s, t, false});
    }
  }
  if (!base.empty()) cl.frontier = ClosureFrontier(cl.ValueSet(), base.begin()->first, bound);
  return cl;
}

std::set<int> ClosureValues(const std::set<int>& base, int bound) {
  std::vector<bool> in(std::max(bound, 0) + 1, false);
  for (int v : base) {
    if (v >= 1 && v <= bound) in[v] = true;
  }
  for (int s = 1; s <= bound; ++s) {
    if (!in[s]) continue;
    for (int t : base) {
      if (t < 1) continue;
      if (s + t - 1 <= bound) in[s + t - 1] = true;
      if (s + t <= bound) in[s + t] = true;
    }
  }
  std::set<int> out;
  for (int v = 1; v <= bound; ++v) {
    if (in[v]) out.insert(v);
  }
  return out;
}

std::optional<int> ClosureFrontier(const std::set<int>& closure, int min_base, int bound) {
  if (!closure.count(bound)) return std::nullopt;
  int v = bound;
  while (closure.count(v - 1)) --v;
  // A run of length min_base - 1 reproduces itself shifted by min_base - 1
  // and min_base, so everything above it is covered.
  if (bound - v + 1 < std::max(min_base - 1, 1)) return std::nullopt;
  return v;
}

const std::vector<Fixture>& Fixtures() {
  static const std::vector<Fixture> fixtures = BuildFixtures();
  return fixtures;
}

FixtureResult VerifyFixture(const Fixture& fx) {
  FixtureResult res;
  res.key = fx.key;
  const Polynomial f = BasicPolynomial(fx.group);
  const Polynomial g = TensorStep(f, fx.h);
  res.actual_n = static_cast<int>(g.term_count());
  res.report = ValidateSpecial(fx.group, g);
  std::ostringstream diff;
  if (!res.report.is_special()) diff << "not special: " << res.report.ToString() << "; ";
  if (res.actual_n != fx.expected_n) diff << "N expected " << fx.expected_n << " got " << res.actual_n << "; ";
  if (fx.expected_g && *fx.expected_g != g) {
    const Polynomial delta = g - *fx.expected_g;
    diff << "G differs from the expected polynomial by " << delta.ToString() << "; ";
  }
  for (const auto& [m, c] : fx.expected_coefficients) {
    if (g.coefficient(m) != c) {
      diff << "coefficient of " << m.ToString() << " expected " << ToString(c) << " got "
           << ToString(g.coefficient(m)) << "; ";
    }
  }
  if (QuotientH(fx.group, g) != fx.h) diff << "quotient does not recover H; ";
  res.diff = diff.str();
  res.passed = res.diff.empty();
  return res;
}

std::vector<FixtureResult> VerifyFixtures(const GroupSpec& g) {
  std::vector<FixtureResult> out;
  for (const Fixture& fx : Fixtures()) {
    if (fx.group == g) out.push_back(VerifyFixture(fx));
  }
  return out;
}

std::string ToString(Outcome o) {
  switch (o) {
    case Outcome::kVerified:
      return "verified";
    case Outcome::kFailed:
      return "failed";
    case Outcome::kInconclusive:
      return "inconclusive";
  }
  return "";
}

std::string ToString(TargetStatus s) {
  switch (s) {
    case TargetStatus::kWitness:
      return "witness";
    case TargetStatus::kNoWitnessExhaustive:
      return "no witness, exhaustive";
    case TargetStatus::kUnknown:
      return "unknown";
  }
  return "";
}

GapTheoremReport VerifyGapTheorem(const GroupSpec& g, const GapLimits& limits) {
  GapTheoremReport rep;
  rep.group = g;
  if (g.family() == GroupFamily::kScalar && g.source_dim() == 1) {
    // Any probability vector on x^m, x^2m, ..., x^dm is special with d terms.
    const int m = g.order();
    const int top = limits.closure_factor * 2;
    bool ok = true;
    for (int d = 1; d <= top && ok; ++d) {
      Polynomial p(1);
      for (int j = 1; j <= d; ++j) p.AddTerm(Monomial{static_cast<unsigned>(m * j)}, Rational(1, d));
      ok = ValidateSpecial(g, p).is_special() && static_cast<int>(p.term_count()) == d;
    }
    Add(rep, "every_count.[1," + std::to_string(top) + "]", ok, "averages of x^(mj) are special");
    rep.min_value = 1;
    rep.frontier = 1;
    Finish(rep);
    return rep;
  }
  if (g.family() == GroupFamily::kScalar) {
    const int m = g.order();
    CheckTwoVariable(rep, g, m + 1, {{1, m}, {m + 2, 2 * m}}, {2 * m + 1, 2 * m + 2}, limits);
    return rep;
  }
  if (g.family() == GroupFamily::kWeighted) {
    if (g.q() != 2) throw UnsupportedError("gap theorem is stated for q = 2 only");
    const int r = g.r();
    CheckTwoVariable(rep, g, r + 2, {{1, r + 1}, {r + 3, 2 * r + 2}}, {2 * r + 3, 2 * r + 4}, limits);
    return rep;
  }

  // gamma7
  const int d = limits.gamma7_degree;
  rep.degree_bound = d;
  const int cap = 36;
  const AchievabilityReport ach = AchievableSet(g, d, SignMode::kNonnegH, limits.budget, cap);
  if (!ach.exhaustive) {
    Add(rep, "sweep.exhaustive", false, "budget exhausted at degree " + std::to_string(d));
    rep.outcome = Outcome::kInconclusive;
    return rep;
  }
  const std::set<int> vals = Keys(ach.achievable);
  rep.min_value = vals.empty() ? std::nullopt : std::optional<int>(*vals.begin());
  Add(rep, "minimum.is_17", rep.min_value == 17, "min " + Join(std::set<int>{rep.min_value.value_or(0)}));
  auto at = [&](int deg) {
    auto it = ach.by_degree.find(deg);
    return it == ach.by_degree.end() ? std::set<int>{} : it->second;
  };
  bool low_only_f = at(7) == std::set<int>{17};
  for (const auto& [deg, vs] : ach.by_degree) {
    if (deg != 7 && (deg < 10 || vs.count(17))) low_only_f = false;
  }
  Add(rep, "degree_le_9.only_basic", low_only_f, "degrees present: " + [&] {
    std::set<int> ks;
    for (const auto& [k, v] : ach.by_degree) ks.insert(k);
    return Join(ks);
  }());
  Add(rep, "degree_10.values_29_30", at(10) == std::set<int>{29, 30}, "degree 10: " + Join(at(10)));
  if (d >= 11) {
    Add(rep, "degree_11.min_ge_31", !at(11).empty() && *at(11).begin() >= 31, "degree 11 (<= 36): " + Join(at(11)));
  }
  if (d >= 12) {
    Add(rep, "degree_12.min_ge_33", !at(12).empty() && *at(12).begin() >= 33, "degree 12 (<= 36): " + Join(at(12)));
  }
  if (d >= 13) {
    Add(rep, "degree_13.min_ge_29", !at(13).empty() && *at(13).begin() >= 29, "degree 13 (<= 36): " + Join(at(13)));
  }
  bool gaps_ok = d >= 13;
  for (int v = 1; v <= 28 && gaps_ok; ++v) {
    if (v != 17 && !ach.proven_gaps.count(v)) gaps_ok = false;
  }
  Add(rep, "gap.[1,16]+[18,28]", gaps_ok, "certified up to N=" + std::to_string(ach.certified_up_to));

  std::map<int, Polynomial> base;
  bool fixtures_ok = true;
  for (const FixtureResult& fr : VerifyFixtures(g)) {
    fixtures_ok &= fr.passed;
    const Fixture& fx = *std::find_if(Fixtures().begin(), Fixtures().end(),
                                      [&](const Fixture& x) { return x.key == fr.key; });
    if (fr.passed) base.emplace(fr.actual_n, TensorStep(BasicPolynomial(g), fx.h));
  }
  Add(rep, "fixtures.all_valid", fixtures_ok, std::to_string(base.size()) + " distinct values witnessed");
  const int bound = limits.closure_factor * 20;
  const FrobeniusClosure cl = ComputeFrobeniusClosure(base, bound);
  bool closure_ok = AllIn(cl.ValueSet(), 37, bound);
  for (int v : {37, 58, 59, 100, bound}) {
    if (!closure_ok || v > bound) break;
    const Polynomial p = cl.Materialize(v);
    closure_ok = ValidateSpecial(g, p).is_special() && static_cast<int>(p.term_count()) == v;
  }
  Add(rep, "closure.[37," + std::to_string(bound) + "]", closure_ok, "from the fixture list");
  rep.frontier = cl.frontier;
  Add(rep, "frontier.is_37", cl.frontier == 37,
      "frontier " + (cl.frontier ? std::to_string(*cl.frontier) : std::string("none")));

  std::set<int> known = vals;
  for (int v : cl.ValueSet()) known.insert(v);
  for (int v = 1; v <= cap; ++v) {
    if (!known.count(v) && !ach.proven_gaps.count(v)) rep.undecided.insert(v);
  }
  Add(rep, "undecided.31_35_36", rep.undecided == std::set<int>{31, 35, 36},
      "undecided: " + Join(rep.undecided) + " (no witness to degree " + std::to_string(d) +
          "; the degree estimate needs 15 or 17)");
  Add(rep, "achievable.29_30_32_33_34", NoneIn(known, 18, 28) && AllIn(known, 29, 30) && AllIn(known, 32, 34),
      "achievable <= 36: " + [&] {
        std::set<int> low;
        for (int v : known) {
          if (v <= cap) low.insert(v);
        }
        return Join(low);
      }());
  rep.gap_intervals = Intervals(ach.proven_gaps);
  Finish(rep);
  return rep;
}

TargetSearchReport SearchTargets(const GroupSpec& g, const std::set<int>& targets, int degree_bound, SignMode mode,
                                 const SearchBudget& budget) {
  if (targets.empty()) throw Error("no targets given");
  TargetSearchReport rep;
  rep.group = g;
  rep.degree_bound = degree_bound;
  rep.sign_mode = mode;
  const AchievabilityReport ach = AchievableSet(g, degree_bound, mode, budget, *targets.rbegin());
  rep.exhaustive = ach.exhaustive;
  rep.stats = ach.stats;
  const int n = g.source_dim();
  for (int t : targets) {
    TargetOutcome out;
    out.target = t;
    if (n == 2 || n == 3) out.required_degree = DegreeBound(n, std::max(t, 1));
    auto it = ach.achievable.find(t);
    if (it != ach.achievable.end()) {
      out.status = TargetStatus::kWitness;
      out.witness = it->second;
    } else if (ach.exhaustive) {
      out.status = TargetStatus::kNoWitnessExhaustive;
      out.certified_impossible = out.required_degree >= 0 && out.required_degree <= degree_bound;
    }
    rep.targets.push_back(std::move(out));
  }
  return rep;
}

std::vector<std::pair<int, int>> Intervals(const std::set<int>& values) {
  std::vector<std::pair<int, int>> out;
  for (int v : values) {
    if (!out.empty() && out.back().second + 1 == v) {
      out.back().second = v;
    } else {
      out.push_back({v, v});
    }
  }
  return out;
}

}  // namespace invsp
