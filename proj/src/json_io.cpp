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

#include "invsp/json_io.hpp"

#include <set>

namespace invsp {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("document") : path) + ": " + what);
}

const Json& Member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) Fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

int IntValue(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) Fail(path, "integer out of range");
  return static_cast<int>(v);
}

Rational RationalValue(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) Fail(path, "expected a rational string such as \"3/4\"");
  try {
    return ParseRational(j.get<std::string>());
  } catch (const Error& e) {
    Fail(path, e.what());
  }
}

Json RationalJson(const Rational& q) { return ToString(q); }

Json OptionalRational(const std::optional<Rational>& q) { return q ? Json(ToString(*q)) : Json(nullptr); }

Monomial MonomialFromJson(const Json& j, int nvars, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an exponent array");
  if (nvars >= 0 && static_cast<int>(j.size()) != nvars) {
    Fail(path, "expected " + std::to_string(nvars) + " exponents, got " + std::to_string(j.size()));
  }
  if (j.empty() || j.size() > kMaxVars) Fail(path, "exponent arrays have 1 to 3 entries");
  std::vector<unsigned> e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int v = IntValue(j[i], path + "[" + std::to_string(i) + "]");
    if (v < 0) Fail(path + "[" + std::to_string(i) + "]", "exponents must be non-negative");
    e.push_back(static_cast<unsigned>(v));
  }
  return Monomial::FromSpan(e);
}

Json IntervalsJson(const std::set<int>& s) {
  Json out = Json::array();
  for (const auto& [lo, hi] : invsp::Intervals(s)) out.push_back(Json::array({lo, hi}));
  return out;
}

Json Stats(const L0Stats& s) {
  return Json{{"vertices", s.vertices},
              {"distinct_vertex_patterns", s.distinct_vertex_patterns},
              {"patterns", s.patterns},
              {"work", s.work},
              {"max_intermediate_rays", s.max_intermediate_rays}};
}

std::string SignModeName(SignMode m) { return m == SignMode::kNonnegH ? "nonneg_H" : "signed_H"; }

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

Json ToJson(const Monomial& m) {
  Json e = Json::array();
  for (int i = 0; i < m.nvars(); ++i) e.push_back(m[i]);
  return e;
}

Json ToJson(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"e", ToJson(m)}, {"c", RationalJson(c)}});
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial PolynomialFromJson(const Json& j) {
  const int nvars = IntValue(Member(j, "", "nvars"), "nvars");
  if (nvars < 1 || nvars > kMaxVars) Fail("nvars", "must be 1, 2 or 3");
  const Json& terms = Member(j, "", "terms");
  if (!terms.is_array()) Fail("terms", "expected an array");
  Polynomial p(nvars);
  std::set<Monomial> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const Monomial m = MonomialFromJson(Member(terms[i], path, "e"), nvars, path + ".e");
    const Rational c = RationalValue(Member(terms[i], path, "c"), path + ".c");
    if (c == 0) Fail(path + ".c", "zero coefficients are not stored");
    if (!seen.insert(m).second) Fail(path + ".e", "duplicate monomial " + m.ToString());
    p.AddTerm(m, c);
  }
  return p;
}

Json ToJson(const GroupSpec& g) {
  switch (g.family()) {
    case GroupFamily::kScalar:
      return Json{{"family", "scalar"}, {"m", g.order()}, {"n", g.source_dim()}};
    case GroupFamily::kWeighted:
      return Json{{"family", "weighted"}, {"p", g.order()}, {"q", g.q()}};
    case GroupFamily::kGamma7:
      return Json{{"family", "gamma7"}};
  }
  return Json();
}

GroupSpec GroupFromJson(const Json& j) {
  try {
    if (j.is_string()) return GroupSpec::Parse(j.get<std::string>());
    const Json& fam = Member(j, "", "family");
    if (!fam.is_string()) Fail("family", "expected a string");
    const std::string name = fam.get<std::string>();
    if (name == "gamma7") return GroupSpec::Gamma7();
    if (name == "scalar") return GroupSpec::Scalar(IntValue(Member(j, "", "m"), "m"), IntValue(Member(j, "", "n"), "n"));
    if (name == "weighted") {
      return GroupSpec::Weighted(IntValue(Member(j, "", "p"), "p"), IntValue(Member(j, "", "q"), "q"));
    }
    Fail("family", "unknown family \"" + name + "\"");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
}

Json ToJson(const LinearForm& form, const std::vector<std::string>& names) {
  Json j = Json::object();
  if (form.constant != 0) j["const"] = RationalJson(form.constant);
  for (const auto& [k, w] : form.weights) j[names.at(k)] = RationalJson(w);
  return j;
}

Json ToJson(const AffineFamily& fam) {
  const std::vector<std::string> names = fam.ParamNames();
  Json params = Json::array();
  for (const Parameter& p : fam.params) {
    Json pj{{"name", p.name}, {"lo", OptionalRational(p.lo)}, {"hi", OptionalRational(p.hi)}};
    if (p.monomial) pj["e"] = ToJson(*p.monomial);
    params.push_back(std::move(pj));
  }
  Json slots = Json::array();
  for (const Slot& s : fam.slots) {
    Json sj = Json::object();
    if (s.monomial) {
      sj["e"] = ToJson(*s.monomial);
    } else {
      sj["label"] = s.label;
    }
    sj["form"] = ToJson(s.form, names);
    slots.push_back(std::move(sj));
  }
  Json j = Json::object();
  if (fam.group) j["group"] = ToJson(*fam.group);
  if (fam.h_degree >= 0) j["h_degree"] = fam.h_degree;
  j["slot_sign"] = fam.slot_sign == SlotSign::kNonneg ? "nonneg" : "free";
  j["params"] = std::move(params);
  j["slots"] = std::move(slots);
  return j;
}

AffineFamily FamilyFromJson(const Json& j) {
  if (!j.is_object()) Fail("", "expected an object");
  AffineFamily fam;
  if (j.contains("group")) fam.group = GroupFromJson(j["group"]);
  if (j.contains("h_degree")) fam.h_degree = IntValue(j["h_degree"], "h_degree");
  if (j.contains("slot_sign")) {
    const Json& s = j["slot_sign"];
    if (s == "nonneg") {
      fam.slot_sign = SlotSign::kNonneg;
    } else if (s == "free") {
      fam.slot_sign = SlotSign::kFree;
    } else {
      Fail("slot_sign", "expected \"nonneg\" or \"free\"");
    }
  }
  const int nvars = fam.group ? fam.group->source_dim() : -1;
  const Json& params = Member(j, "", "params");
  if (!params.is_array()) Fail("params", "expected an array");
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string path = "params[" + std::to_string(i) + "]";
    const Json& nj = Member(params[i], path, "name");
    if (!nj.is_string() || nj.get<std::string>().empty()) Fail(path + ".name", "expected a non-empty string");
    Parameter p;
    p.name = nj.get<std::string>();
    if (p.name == "const") Fail(path + ".name", "\"const\" is reserved");
    for (const Parameter& q : fam.params) {
      if (q.name == p.name) Fail(path + ".name", "duplicate parameter \"" + p.name + "\"");
    }
    if (params[i].contains("lo") && !params[i]["lo"].is_null()) p.lo = RationalValue(params[i]["lo"], path + ".lo");
    if (params[i].contains("hi") && !params[i]["hi"].is_null()) p.hi = RationalValue(params[i]["hi"], path + ".hi");
    if (params[i].contains("e")) p.monomial = MonomialFromJson(params[i]["e"], nvars, path + ".e");
    fam.params.push_back(std::move(p));
  }
  const Json& slots = Member(j, "", "slots");
  if (!slots.is_array()) Fail("slots", "expected an array");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string path = "slots[" + std::to_string(i) + "]";
    Slot s;
    if (slots[i].contains("e")) {
      s.monomial = MonomialFromJson(slots[i]["e"], nvars, path + ".e");
      s.label = s.monomial->ToString();
    }
    if (slots[i].contains("label")) {
      if (!slots[i]["label"].is_string()) Fail(path + ".label", "expected a string");
      s.label = slots[i]["label"].get<std::string>();
    }
    if (s.label.empty()) s.label = "w" + std::to_string(i + 1);
    const Json& form = Member(slots[i], path, "form");
    if (!form.is_object()) Fail(path + ".form", "expected an object");
    for (auto it = form.begin(); it != form.end(); ++it) {
      const std::string fpath = path + ".form." + it.key();
      const Rational v = RationalValue(it.value(), fpath);
      if (it.key() == "const") {
        s.form.constant = v;
        continue;
      }
      int k = -1;
      for (int q = 0; q < fam.num_params(); ++q) {
        if (fam.params[q].name == it.key()) k = q;
      }
      if (k < 0) Fail(fpath, "unknown parameter \"" + it.key() + "\"");
      s.form.AddWeight(k, v);
    }
    fam.slots.push_back(std::move(s));
  }
  return fam;
}

Json PointToJson(const AffineFamily& fam, std::span<const Rational> point) {
  Json j = Json::object();
  for (int k = 0; k < fam.num_params() && k < static_cast<int>(point.size()); ++k) {
    j[fam.params[k].name] = RationalJson(point[k]);
  }
  return j;
}

std::vector<Rational> PointFromJson(const AffineFamily& fam, const Json& j) {
  if (!j.is_object()) Fail("point", "expected an object of parameter values");
  std::map<std::string, Rational> named;
  for (auto it = j.begin(); it != j.end(); ++it) named[it.key()] = RationalValue(it.value(), "point." + it.key());
  try {
    return PointFromNamed(fam, named);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("point: ") + e.what());
  }
}

Json ToJson(const SpecialReport& r) {
  return Json{{"special", r.is_special()},
              {"invariant", r.invariant},
              {"constant_on_hyperplane", r.constant_on_hyperplane},
              {"nonneg", r.nonneg},
              {"zero_at_origin", r.zero_at_origin},
              {"n_terms", r.n_terms},
              {"degree", r.degree}};
}

Json ToJson(const Witness& w) {
  return Json{{"n", w.n_terms}, {"degree", w.g_degree}, {"h", ToJson(w.h)}};
}

Json ToJson(const AchievabilityReport& r) {
  Json ach = Json::array();
  for (const auto& [v, w] : r.achievable) ach.push_back(ToJson(w));
  Json by_degree = Json::object();
  for (const auto& [d, vs] : r.by_degree) by_degree[std::to_string(d)] = Json(std::vector<int>(vs.begin(), vs.end()));
  std::vector<int> values;
  for (const auto& [v, w] : r.achievable) values.push_back(v);
  return Json{{"group", ToJson(r.group)},
              {"degree_bound", r.degree_bound},
              {"sign_mode", SignModeName(r.sign_mode)},
              {"cap", r.cap >= 0 ? Json(r.cap) : Json(nullptr)},
              {"exhaustive", r.exhaustive},
              {"values", values},
              {"by_degree", std::move(by_degree)},
              {"proven_gaps", IntervalsJson(r.proven_gaps)},
              {"certified_up_to", r.certified_up_to},
              {"frontier", r.frontier ? Json(*r.frontier) : Json(nullptr)},
              {"witnesses", std::move(ach)},
              {"stats", Stats(r.stats)}};
}

Json ToJson(const FrobeniusClosure& c) {
  std::vector<int> base;
  for (const auto& [v, p] : c.base) base.push_back(v);
  Json steps = Json::array();
  for (const auto& [v, s] : c.values) {
    if (!s) continue;
    steps.push_back(Json{{"value", v}, {"from", s->parent}, {"base", s->base_value}, {"lambda", s->full ? "1" : "1/2"}});
  }
  const std::set<int> vals = c.ValueSet();
  return Json{{"bound", c.bound},
              {"base", base},
              {"values", IntervalsJson(vals)},
              {"frontier", c.frontier ? Json(*c.frontier) : Json(nullptr)},
              {"steps", std::move(steps)}};
}

Json ToJson(const FixtureResult& r) {
  return Json{{"key", r.key}, {"passed", r.passed}, {"n", r.actual_n}, {"report", ToJson(r.report)}, {"diff", r.diff}};
}

Json ToJson(const GapTheoremReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json gaps = Json::array();
  for (const auto& [lo, hi] : r.gap_intervals) gaps.push_back(Json::array({lo, hi}));
  return Json{{"group", ToJson(r.group)},
              {"outcome", ToString(r.outcome)},
              {"degree_bound", r.degree_bound},
              {"min", r.min_value ? Json(*r.min_value) : Json(nullptr)},
              {"proven_gaps", std::move(gaps)},
              {"undecided", std::vector<int>(r.undecided.begin(), r.undecided.end())},
              {"frontier", r.frontier ? Json(*r.frontier) : Json(nullptr)},
              {"checks", std::move(checks)}};
}

Json ToJson(const TargetSearchReport& r) {
  Json targets = Json::array();
  for (const auto& t : r.targets) {
    targets.push_back(Json{{"target", t.target},
                           {"status", ToString(t.status)},
                           {"required_degree", t.required_degree},
                           {"certified_impossible", t.certified_impossible},
                           {"witness", t.witness ? ToJson(*t.witness) : Json(nullptr)}});
  }
  return Json{{"group", ToJson(r.group)},
              {"degree_bound", r.degree_bound},
              {"sign_mode", SignModeName(r.sign_mode)},
              {"exhaustive", r.exhaustive},
              {"targets", std::move(targets)},
              {"stats", Stats(r.stats)}};
}

Json ToJson(const PatternResult& r, const AffineFamily& fam) {
  Json zero = Json::array();
  for (int s : r.zero_set) zero.push_back(fam.slots[s].label);
  return Json{{"zero_set", std::move(zero)},
              {"feasible", r.feasible},
              {"l0", r.feasible ? Json(r.l0) : Json(nullptr)},
              {"witness", r.feasible ? PointToJson(fam, r.witness) : Json(nullptr)}};
}

Json ToJson(const L0Range& r, const AffineFamily& fam) {
  Json entries = Json::array();
  for (const auto& [v, e] : r.achievable) {
    Json zero = Json::array();
    for (int s : e.zero_set) zero.push_back(fam.slots[s].label);
    entries.push_back(Json{{"l0", v}, {"g_degree", e.g_degree}, {"zero_set", std::move(zero)},
                           {"witness", PointToJson(fam, e.witness)}});
  }
  std::vector<int> values;
  for (const auto& [v, e] : r.achievable) values.push_back(v);
  Json by_degree = Json::object();
  for (const auto& [d, m] : r.by_degree) {
    std::vector<int> vs;
    for (const auto& [v, e] : m) vs.push_back(v);
    by_degree[std::to_string(d)] = vs;
  }
  return Json{{"exhaustive", r.exhaustive},
              {"cap", r.cap >= 0 ? Json(r.cap) : Json(nullptr)},
              {"slots", fam.num_slots()},
              {"values", values},
              {"by_degree", std::move(by_degree)},
              {"witnesses", std::move(entries)},
              {"stats", Stats(r.stats)}};
}

}  // namespace invsp
