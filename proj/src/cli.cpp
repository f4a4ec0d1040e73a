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

#include "invsp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "invsp/affine_family.hpp"
#include "invsp/construct.hpp"
#include "invsp/gapsearch.hpp"
#include "invsp/json_io.hpp"
#include "invsp/transform.hpp"

namespace invsp::cli {
namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";

  bool text() const { return format == "text"; }
};

// "-" reads stdin; text starting with '{' or '[' is inline JSON; anything
// else is a path.
Json ReadJsonArg(Context& ctx, const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
  } else if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream f(arg);
    if (!f) throw ParseError("cannot open " + arg);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  return ParseJson(text);
}

std::uint64_t ResolveBudget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("INVSP_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw ParseError(std::string("INVSP_BUDGET is not a non-negative integer: ") + env);
    }
  }
  return kDefaultBudget;
}

std::string JoinValues(const std::set<int>& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lo, hi] : Intervals(values)) {
    os << (first ? "" : ", ") << lo;
    if (hi == lo + 1) os << ", " << hi;
    if (hi > lo + 1) os << ".." << hi;
    first = false;
  }
  return first ? "(none)" : os.str();
}

std::set<int> ParseTargets(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::exception&) {
      throw ParseError("bad target \"" + item + "\"; expected positive integers such as 31,35,36");
    }
  }
  if (out.empty()) throw ParseError("empty target list");
  return out;
}

void PrintStats(std::ostream& os, const L0Stats& s) {
  os << "vertices: " << s.vertices << "\npatterns: " << s.patterns << "\nwork: " << s.work << "\n";
}

// ---- basic-poly, tensor, validate -------------------------------------

int BasicPoly(Context& ctx, const std::string& group, const std::string& method) {
  const GroupSpec g = GroupSpec::Parse(group);
  Polynomial f;
  if (method == "closed") {
    f = BasicPolyClosed(g);
  } else {
    if (g.family() == GroupFamily::kScalar && !IsPrime(g.order())) {
      throw UnsupportedError("product construction needs a prime order");
    }
    f = BasicPolyProduct(g.order(), g.weights());
  }
  if (ctx.text()) {
    ctx.out << f.ToString() << "\nN = " << f.term_count() << "\n";
  } else {
    ctx.out << ToJson(f).dump(2) << "\n";
  }
  return kOk;
}

int Tensor(Context& ctx, const std::string& group, const std::string& h_arg, const std::string& f_arg) {
  const GroupSpec g = GroupSpec::Parse(group);
  const Polynomial f = f_arg.empty() ? BasicPolynomial(g) : PolynomialFromJson(ReadJsonArg(ctx, f_arg));
  const Polynomial h = PolynomialFromJson(ReadJsonArg(ctx, h_arg));
  const Polynomial big_g = TensorStep(f, h);
  const SpecialReport rep = ValidateSpecial(g, big_g);
  if (ctx.text()) {
    ctx.out << "G = " << big_g.ToString() << "\n" << rep.ToString() << "\n";
  } else {
    ctx.out << Json{{"g", ToJson(big_g)}, {"report", ToJson(rep)}}.dump(2) << "\n";
  }
  return kOk;
}

int Validate(Context& ctx, const std::string& group, const std::string& poly_arg) {
  const GroupSpec g = GroupSpec::Parse(group);
  const Polynomial p = PolynomialFromJson(ReadJsonArg(ctx, poly_arg));
  const SpecialReport rep = ValidateSpecial(g, p);
  if (ctx.text()) {
    ctx.out << rep.ToString() << "\n";
  } else {
    ctx.out << ToJson(rep).dump(2) << "\n";
  }
  return rep.is_special() ? kOk : kMismatch;
}

// ---- family / l0range -------------------------------------------------

struct FamilySource {
  std::string file;
  std::string group;
  int h_degree = -1;
  bool signed_h = false;
};

AffineFamily LoadFamily(Context& ctx, const FamilySource& src) {
  if (!src.file.empty()) {
    if (!src.group.empty()) throw ParseError("give either --family or --group, not both");
    return FamilyFromJson(ReadJsonArg(ctx, src.file));
  }
  if (src.group.empty() || src.h_degree < 0) throw ParseError("need --family, or --group with --h-degree");
  return BuildCoefficientFamily(GroupSpec::Parse(src.group), src.h_degree,
                                src.signed_h ? SignMode::kSignedH : SignMode::kNonnegH);
}

int FamilyBuild(Context& ctx, const FamilySource& src) {
  const AffineFamily fam = LoadFamily(ctx, src);
  if (ctx.text()) {
    const std::vector<std::string> names = fam.ParamNames();
    ctx.out << "parameters:";
    for (const Parameter& p : fam.params) {
      ctx.out << " " << p.name;
      if (p.lo || p.hi) {
        ctx.out << "[" << (p.lo ? ToString(*p.lo) : "-inf") << "," << (p.hi ? ToString(*p.hi) : "inf") << "]";
      }
    }
    ctx.out << "\nslots: " << fam.num_slots() << "\n";
    for (const Slot& s : fam.slots) ctx.out << "  (" << s.form.ToString(names) << ") " << s.label << "\n";
  } else {
    ctx.out << ToJson(fam).dump(2) << "\n";
  }
  return kOk;
}

int FamilyInstantiate(Context& ctx, const FamilySource& src, const std::string& point_arg) {
  const AffineFamily fam = LoadFamily(ctx, src);
  const std::vector<Rational> point = PointFromJson(fam, ReadJsonArg(ctx, point_arg));
  const std::vector<Rational> values = EvaluateSlots(fam, point);
  const int l0 = static_cast<int>(std::count_if(values.begin(), values.end(), [](const Rational& v) { return v != 0; }));
  const bool admissible = IsAdmissible(fam, point);
  const bool monomial = std::all_of(fam.slots.begin(), fam.slots.end(), [](const Slot& s) { return s.monomial; });
  Json j{{"l0", l0}, {"admissible", admissible}};
  Json slot_values = Json::object();
  for (int i = 0; i < fam.num_slots(); ++i) slot_values[fam.slots[i].label] = ToString(values[i]);
  j["slots"] = std::move(slot_values);
  std::optional<Polynomial> g;
  if (monomial) {
    g = Instantiate(fam, point);
    j["g"] = ToJson(*g);
    if (fam.group) j["report"] = ToJson(ValidateSpecial(*fam.group, *g));
  }
  if (ctx.text()) {
    ctx.out << "l0 = " << l0 << (admissible ? "" : " (outside the admissible region)") << "\n";
    if (g) ctx.out << "G = " << g->ToString() << "\n";
  } else {
    ctx.out << j.dump(2) << "\n";
  }
  return kOk;
}

int L0RangeCmd(Context& ctx, const FamilySource& src, int cap, std::optional<std::uint64_t> budget, int jobs) {
  const AffineFamily fam = LoadFamily(ctx, src);
  const L0Range range = ComputeL0Range(fam, {cap, ResolveBudget(budget), jobs});
  if (ctx.text()) {
    std::set<int> values;
    for (const auto& [v, e] : range.achievable) values.insert(v);
    ctx.out << "exhaustive: " << (range.exhaustive ? "yes" : "no") << "\n";
    if (cap >= 0) ctx.out << "cap: " << cap << "\n";
    ctx.out << "l0 values: " << JoinValues(values) << "\n";
    PrintStats(ctx.out, range.stats);
  } else {
    ctx.out << ToJson(range, fam).dump(2) << "\n";
  }
  return range.exhaustive ? kOk : kBudgetExhausted;
}

// ---- gaps / closure ---------------------------------------------------

int Gaps(Context& ctx, const std::string& group, int max_degree, bool signed_h, const std::string& targets,
         std::optional<std::uint64_t> budget, int jobs, int cap) {
  const GroupSpec g = GroupSpec::Parse(group);
  const SignMode mode = signed_h ? SignMode::kSignedH : SignMode::kNonnegH;
  const SearchBudget sb{ResolveBudget(budget), jobs};
  if (!targets.empty()) {
    if (cap >= 0) throw ParseError("--cap cannot be combined with --targets");
    const TargetSearchReport rep = SearchTargets(g, ParseTargets(targets), max_degree, mode, sb);
    if (ctx.text()) {
      ctx.out << g.ToString() << ", degree <= " << max_degree << "\n";
      for (const TargetOutcome& t : rep.targets) {
        ctx.out << "  " << t.target << ": " << ToString(t.status);
        if (t.witness) ctx.out << " (H = " << t.witness->h.ToString() << ")";
        if (t.required_degree >= 0) ctx.out << "; degree estimate " << t.required_degree;
        if (t.certified_impossible) ctx.out << "; impossible";
        ctx.out << "\n";
      }
      PrintStats(ctx.out, rep.stats);
    } else {
      ctx.out << ToJson(rep).dump(2) << "\n";
    }
    if (!rep.exhaustive) ctx.err << "budget exhausted; result is inconclusive\n";
    return rep.exhaustive ? kOk : kBudgetExhausted;
  }
  const AchievabilityReport rep = AchievableSet(g, max_degree, mode, sb, cap);
  if (ctx.text()) {
    std::set<int> values;
    for (const auto& [v, w] : rep.achievable) values.insert(v);
    ctx.out << g.ToString() << ", degree <= " << max_degree << (rep.exhaustive ? "" : " (inconclusive)") << "\n";
    ctx.out << "achievable: " << JoinValues(values) << "\n";
    ctx.out << "proven gaps (N <= " << rep.certified_up_to << "): " << JoinValues(rep.proven_gaps) << "\n";
    if (rep.frontier) ctx.out << "frontier: " << *rep.frontier << "\n";
    PrintStats(ctx.out, rep.stats);
  } else {
    ctx.out << ToJson(rep).dump(2) << "\n";
  }
  if (!rep.exhaustive) ctx.err << "budget exhausted; result is inconclusive\n";
  return rep.exhaustive ? kOk : kBudgetExhausted;
}

// Base: [17, 29, 30] (values only) or [<polynomial>, ...] (constructive).
int Closure(Context& ctx, const std::string& base_arg, int bound, const std::string& group) {
  const Json base = ReadJsonArg(ctx, base_arg);
  if (!base.is_array() || base.empty()) throw ParseError("--base: expected a non-empty array");
  if (base[0].is_number_integer()) {
    std::set<int> values;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (!base[i].is_number_integer() || base[i].get<long long>() < 1 || base[i].get<long long>() > 1000000) {
        throw ParseError("base[" + std::to_string(i) + "]: expected a positive integer");
      }
      values.insert(base[i].get<int>());
    }
    const std::set<int> closure = ClosureValues(values, bound);
    const std::optional<int> frontier = ClosureFrontier(closure, *values.begin(), bound);
    if (ctx.text()) {
      ctx.out << "closure: " << JoinValues(closure) << "\n";
      ctx.out << "frontier: " << (frontier ? std::to_string(*frontier) : std::string("none")) << "\n";
    } else {
      Json iv = Json::array();
      for (const auto& [lo, hi] : Intervals(closure)) iv.push_back(Json::array({lo, hi}));
      ctx.out << Json{{"bound", bound},
                      {"base", std::vector<int>(values.begin(), values.end())},
                      {"values", std::move(iv)},
                      {"frontier", frontier ? Json(*frontier) : Json(nullptr)}}
                     .dump(2)
              << "\n";
    }
    return kOk;
  }
  std::optional<GroupSpec> g;
  if (!group.empty()) g = GroupSpec::Parse(group);
  std::map<int, Polynomial> polys;
  for (std::size_t i = 0; i < base.size(); ++i) {
    Polynomial p;
    try {
      p = PolynomialFromJson(base[i]);
    } catch (const ParseError& e) {
      throw ParseError("base[" + std::to_string(i) + "]." + e.what());
    }
    if (g && !ValidateSpecial(*g, p).is_special()) {
      ctx.err << "base[" << i << "] is not special for " << g->ToString() << "\n";
      return kMismatch;
    }
    polys.emplace(static_cast<int>(p.term_count()), std::move(p));
  }
  const FrobeniusClosure cl = ComputeFrobeniusClosure(polys, bound);
  if (ctx.text()) {
    ctx.out << "closure: " << JoinValues(cl.ValueSet()) << "\n";
    ctx.out << "frontier: " << (cl.frontier ? std::to_string(*cl.frontier) : std::string("none")) << "\n";
  } else {
    ctx.out << ToJson(cl).dump(2) << "\n";
  }
  return kOk;
}

// ---- verify-paper -----------------------------------------------------

struct LedgerEntry {
  std::string key;
  bool passed = false;
  bool inconclusive = false;
  std::string detail;
};

Polynomial Gamma7Reference() {
  Polynomial f(3);
  const std::vector<std::pair<int, Monomial>> terms = {
      {1, {7, 0, 0}},  {1, {0, 7, 0}},  {1, {0, 0, 7}},  {14, {3, 2, 0}}, {14, {2, 0, 3}}, {14, {0, 3, 2}},
      {14, {1, 1, 1}}, {7, {5, 1, 0}},  {7, {1, 0, 5}},  {7, {0, 5, 1}},  {7, {1, 3, 0}},  {7, {3, 0, 1}},
      {7, {0, 1, 3}},  {7, {1, 2, 4}},  {7, {2, 4, 1}},  {7, {4, 1, 2}},  {7, {2, 2, 2}}};
  for (const auto& [c, m] : terms) f.AddTerm(m, c);
  return f;
}

Polynomial F11Reference() {
  Polynomial f(2);
  const std::vector<std::pair<int, Monomial>> terms = {{1, {11, 0}}, {1, {0, 11}}, {11, {9, 1}}, {44, {7, 2}},
                                                       {77, {5, 3}}, {55, {3, 4}}, {11, {1, 5}}};
  for (const auto& [c, m] : terms) f.AddTerm(m, c);
  return f;
}

// W(A,B,C) = (1-A, 2-B, 1-C, A, 2A+B, A+2B+C, B+2C, C).
AffineFamily SparsityExample(SlotSign sign) {
  AffineFamily fam;
  fam.slot_sign = sign;
  for (const char* n : {"A", "B", "C"}) fam.params.push_back(Parameter{n, std::nullopt, std::nullopt, std::nullopt});
  auto slot = [&](int c, std::vector<std::pair<int, int>> w) {
    Slot s;
    s.label = "w" + std::to_string(fam.slots.size() + 1);
    s.form.constant = c;
    for (const auto& [k, v] : w) s.form.AddWeight(k, v);
    fam.slots.push_back(std::move(s));
  };
  slot(1, {{0, -1}});
  slot(2, {{1, -1}});
  slot(1, {{2, -1}});
  slot(0, {{0, 1}});
  slot(0, {{0, 2}, {1, 1}});
  slot(0, {{0, 1}, {1, 2}, {2, 1}});
  slot(0, {{1, 1}, {2, 2}});
  slot(0, {{2, 1}});
  return fam;
}

std::string GroupKey(const GroupSpec& g) {
  std::string s = g.ToString();
  std::replace(s.begin(), s.end(), ':', '_');
  return s;
}

std::vector<LedgerEntry> BuildLedger(const SearchBudget& budget) {
  std::vector<LedgerEntry> ledger;
  auto add = [&](std::string key, bool ok, std::string detail) {
    ledger.push_back({std::move(key), ok, false, std::move(detail)});
  };

  for (int p : {3, 5, 7, 11, 13, 17, 19}) {
    const GroupSpec g = GroupSpec::Weighted(p, 2);
    const Polynomial closed = BasicPolyClosed(g);
    add("construct." + GroupKey(g) + ".product_equals_closed", BasicPolyProduct(p, g.weights()) == closed,
        std::to_string(closed.term_count()) + " terms");
  }
  for (int p : {2, 3, 5, 7}) {
    const GroupSpec g = GroupSpec::Scalar(p, 2);
    add("construct." + GroupKey(g) + ".product_equals_binomial", BasicPolyProduct(p, g.weights()) == BasicPolyClosed(g),
        "(x+y)^" + std::to_string(p));
  }
  {
    const GroupSpec g = GroupSpec::Gamma7();
    const Polynomial prod = BasicPolyProduct(7, g.weights());
    add("construct.gamma7.product_equals_reference", prod == Gamma7Reference(),
        std::to_string(prod.term_count()) + " terms");
    add("construct.gamma7.closed_equals_reference", BasicPolyClosed(g) == Gamma7Reference(), "17 terms");
    add("construct.gamma7.reference_is_special", ValidateSpecial(g, Gamma7Reference()).is_special(), "");
  }
  {
    const Polynomial f11 = BasicPolyClosed(GroupSpec::Weighted(11, 2));
    add("construct.weighted_11_2.coefficients", f11 == F11Reference() && f11.term_count() == 7, f11.ToString());
  }
  {
    bool ok = true;
    std::string bad;
    for (int r = 1; 2 * r + 1 <= 45; ++r) {
      const bool expect = IsPrime(2 * r + 1);
      if (ModReductionCheck(r) != expect) {
        ok = false;
        bad += " r=" + std::to_string(r);
      }
    }
    add("construct.mod_reduction.iff_prime_le_45", ok, ok ? "3 <= 2r+1 <= 45" : "mismatch at" + bad);
  }

  for (const FixtureResult& fr : VerifyFixtures(GroupSpec::Gamma7())) {
    add("fixture." + fr.key, fr.passed, fr.passed ? "N = " + std::to_string(fr.actual_n) : fr.diff);
  }
  for (const Fixture& fx : Fixtures()) {
    if (fx.group.family() == GroupFamily::kGamma7) continue;
    const FixtureResult fr = VerifyFixture(fx);
    add("fixture." + fr.key, fr.passed, fr.passed ? "N = " + std::to_string(fr.actual_n) : fr.diff);
  }

  std::vector<GroupSpec> groups;
  for (int p : {3, 5, 7, 9, 11}) groups.push_back(GroupSpec::Weighted(p, 2));
  for (int m : {2, 3, 5}) groups.push_back(GroupSpec::Scalar(m, 1));
  for (int m : {2, 3, 4}) groups.push_back(GroupSpec::Scalar(m, 2));
  groups.push_back(GroupSpec::Gamma7());
  GapLimits limits;
  limits.budget = budget;
  for (const GroupSpec& g : groups) {
    const GapTheoremReport rep = VerifyGapTheorem(g, limits);
    for (const TheoremCheck& c : rep.checks) {
      ledger.push_back({"gaps." + GroupKey(g) + "." + c.name, c.passed, rep.outcome == Outcome::kInconclusive,
                        c.detail});
    }
  }

  {
    const AffineFamily free_w = SparsityExample(SlotSign::kFree);
    auto l0_at = [&](int a, int b, int c) {
      const std::vector<Rational> pt = {Rational(a), Rational(b), Rational(c)};
      const std::vector<Rational> v = EvaluateSlots(free_w, pt);
      return static_cast<int>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; }));
    };
    add("sparsity.w.origin_l0_3", l0_at(0, 0, 0) == 3, "W(0,0,0)");
    add("sparsity.w.point_1_m2_1_l0_4", l0_at(1, -2, 1) == 4, "W(1,-2,1)");
    add("sparsity.w.point_1_2_1_l0_5", l0_at(1, 2, 1) == 5, "W(1,2,1)");
    const L0Range free_range = ComputeL0Range(free_w);
    std::set<int> fv;
    for (const auto& [v, e] : free_range.achievable) fv.insert(v);
    add("sparsity.w.free_values_include_3_4_5_8",
        free_range.exhaustive && fv.count(3) && fv.count(4) && fv.count(5) && fv.count(8), JoinValues(fv));
    add("sparsity.w.free_excludes_1_2", free_range.exhaustive && !fv.count(1) && !fv.count(2), JoinValues(fv));
    const AffineFamily orthant = SparsityExample(SlotSign::kNonneg);
    const L0Range nn = ComputeL0Range(orthant);
    std::set<int> nv;
    for (const auto& [v, e] : nn.achievable) nv.insert(v);
    add("sparsity.w.orthant_excludes_4", nn.exhaustive && !nv.count(4) && nv.count(3) && nv.count(5), JoinValues(nv));
  }

  {
    const GroupSpec g = GroupSpec::Gamma7();
    const AffineFamily fam = BuildCoefficientFamily(g, 4, SignMode::kNonnegH);
    std::vector<Rational> pt(fam.num_params());
    pt[fam.ParamIndex("U")] = 14;
    const Polynomial big_g = Instantiate(fam, pt);
    add("family.gamma7_h4.u14_gives_29", big_g.term_count() == 29 && big_g == TensorStep(BasicPolynomial(g), HFromPoint(fam, pt)),
        std::to_string(big_g.term_count()) + " terms");
    const AffineFamily fam10 = BuildCoefficientFamily(g, 3, SignMode::kNonnegH);
    const L0Range r10 = ComputeL0Range(fam10);
    std::set<int> v10;
    for (const auto& [v, e] : r10.achievable) v10.insert(v);
    add("family.gamma7_h3.values_17_29_30", v10 == std::set<int>{17, 29, 30}, JoinValues(v10));
  }
  {
    // With signed H the two-variable quartic family drops below 2m+1.
    const GroupSpec g = GroupSpec::Scalar(4, 2);
    const TargetSearchReport rep = SearchTargets(g, {8}, 8, SignMode::kSignedH, budget);
    const TargetOutcome& t = rep.targets.front();
    bool ok = t.witness.has_value();
    std::string detail = ToString(t.status);
    if (ok) {
      bool negative = false;
      for (const auto& [m, c] : t.witness->h.terms()) negative |= c < 0;
      ok = negative && t.witness->n_terms == 8 && ValidateSpecial(g, t.witness->g).is_special();
      detail = "H = " + t.witness->h.ToString();
    }
    add("signed.scalar_4_2.n8_witness", ok, detail);
  }
  return ledger;
}

int VerifyPaper(Context& ctx, std::optional<std::uint64_t> budget, int jobs) {
  const std::vector<LedgerEntry> ledger = BuildLedger({ResolveBudget(budget), jobs});
  int passed = 0;
  int failed = 0;
  bool inconclusive = false;
  for (const LedgerEntry& e : ledger) {
    (e.passed ? passed : failed) += 1;
    inconclusive |= e.inconclusive;
  }
  const std::string outcome = failed == 0 ? "verified" : inconclusive ? "inconclusive" : "failed";
  if (ctx.text()) {
    for (const LedgerEntry& e : ledger) {
      ctx.out << (e.passed ? "PASS " : e.inconclusive ? "INCONCLUSIVE " : "FAIL ") << e.key;
      if (!e.detail.empty()) ctx.out << "  " << e.detail;
      ctx.out << "\n";
    }
    ctx.out << passed << " passed, " << failed << " failed: " << outcome << "\n";
  } else {
    Json checks = Json::array();
    for (const LedgerEntry& e : ledger) {
      checks.push_back(Json{{"key", e.key}, {"passed", e.passed}, {"detail", e.detail}});
    }
    ctx.out << Json{{"outcome", outcome}, {"passed", passed}, {"failed", failed}, {"checks", std::move(checks)}}.dump(2)
            << "\n";
  }
  if (failed == 0) return kOk;
  return inconclusive ? kBudgetExhausted : kMismatch;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Special invariant polynomials: construction, tensor steps, term-count gaps."};
  app.name("invsp");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  add_format(&app);

  std::function<int()> action;
  std::string group;
  std::string method = "closed";
  std::string h_arg;
  std::string f_arg;
  std::string poly_arg;
  std::string point_arg;
  std::string targets;
  std::string base_arg;
  int max_degree = -1;
  int bound = 200;
  int cap = -1;
  int jobs = 1;
  bool signed_h = false;
  std::optional<std::uint64_t> budget;
  FamilySource src;

  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Work budget (0 = unlimited; default from INVSP_BUDGET or built in)");
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  };
  auto add_family_source = [&](CLI::App* sub) {
    sub->add_option("--family", src.file, "Family JSON file, inline JSON, or - for stdin");
    sub->add_option("--group", src.group, "Group: scalar:<m>:<n>, weighted:<p>:<q> or gamma7");
    sub->add_option("--h-degree", src.h_degree, "Degree of H")->check(CLI::NonNegativeNumber);
    sub->add_flag("--signed", src.signed_h, "Let every H coefficient take either sign");
  };

  auto* basic = app.add_subcommand("basic-poly", "Basic polynomial of a group");
  add_format(basic);
  basic->add_option("--group", group, "Group spec")->required();
  basic->add_option("--method", method, "Construction")->check(CLI::IsMember({"closed", "product"}));
  basic->callback([&] { action = [&] { return BasicPoly(ctx, group, method); }; });

  auto* tensor = app.add_subcommand("tensor", "G = F - H + HF with its special report");
  tensor->set_help_flag("--help", "Print this help message and exit");
  add_format(tensor);
  tensor->add_option("--group", group, "Group spec")->required();
  tensor->add_option("--h", h_arg, "H as polynomial JSON (file, inline, or -)")->required();
  tensor->add_option("--f", f_arg, "F as polynomial JSON (default: the basic polynomial)");
  tensor->callback([&] { action = [&] { return Tensor(ctx, group, h_arg, f_arg); }; });

  auto* validate = app.add_subcommand("validate", "Check that a polynomial is special");
  add_format(validate);
  validate->add_option("--group", group, "Group spec")->required();
  validate->add_option("poly", poly_arg, "Polynomial JSON (file, inline, or -)")->required();
  validate->callback([&] { action = [&] { return Validate(ctx, group, poly_arg); }; });

  auto* family = app.add_subcommand("family", "Coefficient families of G over the parameters of H");
  family->require_subcommand(1);
  auto* fbuild = family->add_subcommand("build", "Build or normalize a family");
  add_format(fbuild);
  add_family_source(fbuild);
  fbuild->callback([&] { action = [&] { return FamilyBuild(ctx, src); }; });
  auto* finst = family->add_subcommand("instantiate", "Evaluate a family at a parameter point");
  add_format(finst);
  add_family_source(finst);
  finst->add_option("--point", point_arg, "Parameter values as JSON object")->required();
  finst->callback([&] { action = [&] { return FamilyInstantiate(ctx, src, point_arg); }; });
  auto* fl0 = family->add_subcommand("l0range", "Achievable numbers of nonzero slots");
  add_format(fl0);
  add_family_source(fl0);
  add_search(fl0);
  fl0->add_option("--cap", cap, "Only enumerate values up to the cap")->check(CLI::NonNegativeNumber);
  fl0->callback([&] { action = [&] { return L0RangeCmd(ctx, src, cap, budget, jobs); }; });

  auto* l0 = app.add_subcommand("l0range", "Same as family l0range");
  add_format(l0);
  add_family_source(l0);
  add_search(l0);
  l0->add_option("--cap", cap, "Only enumerate values up to the cap")->check(CLI::NonNegativeNumber);
  l0->callback([&] { action = [&] { return L0RangeCmd(ctx, src, cap, budget, jobs); }; });

  auto* gaps = app.add_subcommand("gaps", "Achievable term counts and certified gaps");
  add_format(gaps);
  gaps->add_option("--group", group, "Group spec")->required();
  gaps->add_option("--max-degree", max_degree, "Degree bound for G")->required()->check(CLI::PositiveNumber);
  gaps->add_flag("--signed", signed_h, "Let every H coefficient take either sign");
  gaps->add_option("--targets", targets, "Comma separated target counts, e.g. 31,35,36");
  gaps->add_option("--cap", cap, "Only enumerate values up to the cap")->check(CLI::NonNegativeNumber);
  add_search(gaps);
  gaps->callback([&] {
    action = [&] { return Gaps(ctx, group, max_degree, signed_h, targets, budget, jobs, cap); };
  });

  auto* closure = app.add_subcommand("closure", "Postage-stamp closure of achievable values");
  add_format(closure);
  closure->add_option("--base", base_arg, "JSON array of values or of special polynomials")->required();
  closure->add_option("--bound", bound, "Largest value to compute")->check(CLI::Range(1, 100000));
  closure->add_option("--group", group, "Validate polynomial bases against this group");
  closure->callback([&] { action = [&] { return Closure(ctx, base_arg, bound, group); }; });

  auto* verify = app.add_subcommand("verify-paper", "Run every fixture and theorem check");
  add_format(verify);
  add_search(verify);
  verify->callback([&] { action = [&] { return VerifyPaper(ctx, budget, jobs); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }
  try {
    return action();
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kMismatch;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace invsp::cli
