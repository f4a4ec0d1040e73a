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

#include "invsp/affine_family.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "invsp/construct.hpp"
#include "invsp/lp.hpp"
#include "invsp/polytope.hpp"

namespace invsp {

void LinearForm::AddWeight(int param, const Rational& w) {
  if (w == 0) return;
  auto [it, inserted] = weights.try_emplace(param, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0) weights.erase(it);
  }
}

Rational LinearForm::Evaluate(std::span<const Rational> point) const {
  Rational v = constant;
  for (const auto& [k, w] : weights) {
    if (k < 0 || k >= static_cast<int>(point.size())) throw DimensionError("point is too short for the form");
    v += w * point[k];
  }
  return v;
}

bool LinearForm::IsLoneParameter(int* param) const {
  if (constant != 0 || weights.size() != 1 || weights.begin()->second <= 0) return false;
  if (param) *param = weights.begin()->first;
  return true;
}

std::string LinearForm::ToString(std::span<const std::string> names) const {
  std::ostringstream os;
  bool first = true;
  if (constant != 0) {
    os << invsp::ToString(constant);
    first = false;
  }
  for (const auto& [k, w] : weights) {
    const std::string name = k < static_cast<int>(names.size()) ? names[k] : "p" + std::to_string(k);
    Rational mag = abs(w);
    if (first) {
      if (w < 0) os << "-";
    } else {
      os << (w < 0 ? " - " : " + ");
    }
    if (mag != 1) os << invsp::ToString(mag) << "*";
    os << name;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int AffineFamily::ParamIndex(std::string_view name) const {
  for (int i = 0; i < num_params(); ++i) {
    if (params[i].name == name) return i;
  }
  throw Error("unknown parameter '" + std::string(name) + "'");
}

std::vector<std::string> AffineFamily::ParamNames() const {
  std::vector<std::string> names;
  names.reserve(params.size());
  for (const auto& p : params) names.push_back(p.name);
  return names;
}

std::string CanonicalParamName(const GroupSpec& g, const Monomial& m) {
  if (g.family() == GroupFamily::kGamma7) {
    static const std::vector<std::pair<Monomial, const char*>> kNames = {
        {{1, 1, 1}, "U"}, {{0, 1, 3}, "B"}, {{1, 3, 0}, "C"}, {{3, 0, 1}, "D"},
        {{0, 3, 2}, "R"}, {{2, 0, 3}, "S"}, {{3, 2, 0}, "T"}, {{0, 5, 1}, "K"},
        {{1, 0, 5}, "L"}, {{5, 1, 0}, "M"}, {{2, 2, 2}, "V"},
    };
    for (const auto& [mono, name] : kNames) {
      if (mono == m) return name;
    }
  }
  if (g.family() == GroupFamily::kWeighted && g.q() == 2 && m.nvars() == 2) {
    if (static_cast<int>(m[0] + 2 * m[1]) == g.order()) return "lambda_" + std::to_string(m[1]);
  }
  std::string name = "h";
  for (int i = 0; i < m.nvars(); ++i) name += "_" + std::to_string(m[i]);
  return name;
}

AffineFamily BuildCoefficientFamily(const GroupSpec& g, int h_degree, SignMode mode) {
  const Polynomial f = BasicPolynomial(g);
  const std::vector<Monomial> hmonos = EnumerateInvariantMonomials(g, std::max(h_degree, 0));

  AffineFamily fam;
  fam.group = g;
  fam.h_degree = h_degree;
  fam.slot_sign = SlotSign::kNonneg;
  std::map<Monomial, LinearForm> acc;
  for (const auto& [m, c] : f.terms()) acc[m].constant += c;
  for (int k = 0; k < static_cast<int>(hmonos.size()); ++k) {
    const Monomial& u = hmonos[k];
    fam.params.push_back({CanonicalParamName(g, u), u, std::nullopt, std::nullopt});
    acc[u].AddWeight(k, -1);
    for (const auto& [m, c] : f.terms()) acc[u * m].AddWeight(k, c);
  }
  for (auto& [m, form] : acc) {
    if (form.is_zero()) continue;
    fam.slots.push_back({m, m.ToString(), std::move(form)});
  }

  if (mode == SignMode::kNonnegH) {
    const bool all = g.family() == GroupFamily::kScalar;
    std::vector<bool> lone(fam.params.size(), all);
    for (const Slot& s : fam.slots) {
      int k = -1;
      if (s.form.IsLoneParameter(&k)) lone[k] = true;
    }
    for (std::size_t k = 0; k < fam.params.size(); ++k) {
      if (lone[k]) fam.params[k].lo = Rational(0);
    }
  }
  return fam;
}

std::vector<Rational> PointFromNamed(const AffineFamily& fam, const std::map<std::string, Rational>& named) {
  std::vector<Rational> point(fam.params.size());
  std::vector<bool> seen(fam.params.size(), false);
  for (const auto& [name, value] : named) {
    const int k = fam.ParamIndex(name);
    point[k] = value;
    seen[k] = true;
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw Error("missing value for parameter '" + fam.params[k].name + "'");
  }
  return point;
}

std::vector<Rational> EvaluateSlots(const AffineFamily& fam, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != fam.num_params()) throw DimensionError("point has the wrong dimension");
  std::vector<Rational> values;
  values.reserve(fam.slots.size());
  for (const Slot& s : fam.slots) values.push_back(s.form.Evaluate(point));
  return values;
}

namespace {

int FamilyNvars(const AffineFamily& fam) {
  if (fam.group) return fam.group->source_dim();
  for (const Slot& s : fam.slots) {
    if (s.monomial) return s.monomial->nvars();
  }
  for (const Parameter& p : fam.params) {
    if (p.monomial) return p.monomial->nvars();
  }
  return 1;
}

}  // namespace

Polynomial Instantiate(const AffineFamily& fam, std::span<const Rational> point) {
  const std::vector<Rational> values = EvaluateSlots(fam, point);
  Polynomial g(FamilyNvars(fam));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!fam.slots[i].monomial) throw UnsupportedError("family slots carry no monomials");
    g.AddTerm(*fam.slots[i].monomial, values[i]);
  }
  return g;
}

Polynomial HFromPoint(const AffineFamily& fam, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != fam.num_params()) throw DimensionError("point has the wrong dimension");
  Polynomial h(FamilyNvars(fam));
  for (int k = 0; k < fam.num_params(); ++k) {
    if (!fam.params[k].monomial) throw UnsupportedError("family parameters carry no monomials");
    h.AddTerm(*fam.params[k].monomial, point[k]);
  }
  return h;
}

bool IsAdmissible(const AffineFamily& fam, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != fam.num_params()) return false;
  for (int k = 0; k < fam.num_params(); ++k) {
    const Parameter& p = fam.params[k];
    if (p.lo && point[k] < *p.lo) return false;
    if (p.hi && point[k] > *p.hi) return false;
  }
  if (fam.slot_sign == SlotSign::kNonneg) {
    for (const Slot& s : fam.slots) {
      if (s.form.Evaluate(point) < 0) return false;
    }
  }
  return true;
}

namespace {

bool HasBounds(const AffineFamily& fam) {
  return std::any_of(fam.params.begin(), fam.params.end(), [](const Parameter& p) { return p.lo || p.hi; });
}

std::vector<Rational> DenseWeights(const LinearForm& form, int n) {
  std::vector<Rational> row(n);
  for (const auto& [k, w] : form.weights) row[k] = w;
  return row;
}

// Solution set of the equations "form = 0" for the given slots: a point and
// a basis of directions, or nullopt when inconsistent.
struct Flat {
  std::vector<Rational> origin;
  std::vector<std::vector<Rational>> directions;
};

std::optional<Flat> SolveFlat(const AffineFamily& fam, std::span<const int> eq_slots) {
  const int n = fam.num_params();
  std::vector<std::vector<Rational>> m;  // [a_1..a_n | rhs]
  for (int s : eq_slots) {
    std::vector<Rational> row = DenseWeights(fam.slots[s].form, n);
    row.push_back(-fam.slots[s].form.constant);
    m.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
    int piv = r;
    while (piv < static_cast<int>(m.size()) && m[piv][c] == 0) ++piv;
    if (piv == static_cast<int>(m.size())) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < static_cast<int>(m.size()); ++i) {
    if (m[i][n] != 0) return std::nullopt;
  }
  Flat flat;
  flat.origin.assign(n, 0);
  for (int i = 0; i < r; ++i) flat.origin[pivot_col[i]] = m[i][n];
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> d(n);
    d[c] = 1;
    for (int i = 0; i < r; ++i) d[pivot_col[i]] = -m[i][c];
    flat.directions.push_back(std::move(d));
  }
  return flat;
}

// Slots that vanish identically on the flat.
std::vector<int> ForcedZeros(const AffineFamily& fam, const Flat& flat) {
  std::vector<int> forced;
  for (int s = 0; s < fam.num_slots(); ++s) {
    const LinearForm& form = fam.slots[s].form;
    if (form.Evaluate(flat.origin) != 0) continue;
    bool constant_on_flat = true;
    for (const auto& d : flat.directions) {
      Rational v = 0;
      for (const auto& [k, w] : form.weights) v += w * d[k];
      if (v != 0) {
        constant_on_flat = false;
        break;
      }
    }
    if (constant_on_flat) forced.push_back(s);
  }
  return forced;
}

// A point of the flat where every slot outside `forced` is nonzero.
std::vector<Rational> GenericPoint(const AffineFamily& fam, const Flat& flat, const std::vector<int>& forced) {
  std::vector<bool> skip(fam.slots.size(), false);
  for (int s : forced) skip[s] = true;
  for (long t = 1;; ++t) {
    std::vector<Rational> p = flat.origin;
    Rational power = 1;
    for (const auto& d : flat.directions) {
      power *= t;
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += power * d[k];
    }
    bool ok = true;
    for (int s = 0; s < fam.num_slots() && ok; ++s) {
      if (!skip[s] && fam.slots[s].form.Evaluate(p) == 0) ok = false;
    }
    if (ok) return p;
  }
}

PatternResult FreePattern(const AffineFamily& fam, std::span<const int> zero_set) {
  PatternResult res;
  res.zero_set.assign(zero_set.begin(), zero_set.end());
  res.l0 = fam.num_slots() - static_cast<int>(res.zero_set.size());
  const auto flat = SolveFlat(fam, zero_set);
  if (!flat) return res;
  const std::vector<int> forced = ForcedZeros(fam, *flat);
  if (forced.size() != res.zero_set.size()) return res;
  res.feasible = true;
  res.witness = GenericPoint(fam, *flat, forced);
  return res;
}

PatternResult NonnegPattern(const AffineFamily& fam, std::span<const int> zero_set) {
  PatternResult res;
  res.zero_set.assign(zero_set.begin(), zero_set.end());
  res.l0 = fam.num_slots() - static_cast<int>(res.zero_set.size());
  const int n = fam.num_params();
  lp::Problem prob(n + 1);
  for (int k = 0; k < n; ++k) {
    prob.lower[k] = fam.params[k].lo;
    prob.upper[k] = fam.params[k].hi;
  }
  prob.upper[n] = Rational(1);
  prob.objective[n] = 1;
  std::vector<bool> in_zero(fam.slots.size(), false);
  for (int s : zero_set) in_zero[s] = true;
  for (int s = 0; s < fam.num_slots(); ++s) {
    std::vector<Rational> row = DenseWeights(fam.slots[s].form, n);
    row.push_back(0);
    if (in_zero[s]) {
      prob.Add(std::move(row), lp::Relation::kEqual, -fam.slots[s].form.constant);
    } else {
      row[n] = -1;
      prob.Add(std::move(row), lp::Relation::kGreaterEq, -fam.slots[s].form.constant);
    }
  }
  const lp::Solution sol = lp::Maximize(prob);
  if (sol.status != lp::Status::kOptimal || sol.value <= 0) return res;
  res.feasible = true;
  res.witness.assign(sol.x.begin(), sol.x.begin() + n);
  return res;
}

std::vector<int> SortedUnique(std::span<const int> zero_set, int num_slots) {
  std::vector<int> z(zero_set.begin(), zero_set.end());
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  for (int s : z) {
    if (s < 0 || s >= num_slots) throw DimensionError("slot index out of range");
  }
  return z;
}

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

int PopCount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

std::vector<int> BitsToIndices(const Bits& b, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if ((b[i / 64] >> (i % 64)) & 1) out.push_back(i);
  }
  return out;
}

int GDegree(const AffineFamily& fam, const std::vector<int>& zero_set) {
  std::vector<bool> zero(fam.slots.size(), false);
  for (int s : zero_set) zero[s] = true;
  int deg = -1;
  for (int s = 0; s < fam.num_slots(); ++s) {
    if (!zero[s] && fam.slots[s].monomial) deg = std::max(deg, static_cast<int>(fam.slots[s].monomial->degree()));
  }
  return deg;
}

void Record(L0Range& out, const AffineFamily& fam, L0Entry entry) {
  entry.g_degree = GDegree(fam, entry.zero_set);
  out.by_degree[entry.g_degree].try_emplace(entry.l0, entry);
  out.achievable.try_emplace(entry.l0, std::move(entry));
}

polytope::Row IntegerRow(const Rational& constant, const std::vector<Rational>& coeffs) {
  Integer lcm = constant.get_den();
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  polytope::Row row;
  row.reserve(coeffs.size() + 1);
  auto scale = [&](const Rational& q) {
    Integer v = lcm / q.get_den();
    return Integer(v * q.get_num());
  };
  row.push_back(scale(constant));
  for (const auto& c : coeffs) row.push_back(scale(c));
  return row;
}

L0Range FreeRange(const AffineFamily& fam, const L0Options& options) {
  if (HasBounds(fam)) throw UnsupportedError("sign-free l0 range requires unbounded parameters");
  L0Range out;
  out.cap = options.cap;
  const int ns = fam.num_slots();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  auto close = [&](const std::vector<int>& z) -> std::optional<std::vector<int>> {
    const auto flat = SolveFlat(fam, z);
    if (!flat) return std::nullopt;
    return ForcedZeros(fam, *flat);
  };
  if (auto start = close({})) {
    seen.insert(*start);
    stack.push_back(*start);
  }
  std::uint64_t work = 0;
  while (!stack.empty()) {
    std::vector<int> z = std::move(stack.back());
    stack.pop_back();
    for (int j = 0; j < ns; ++j) {
      if (std::binary_search(z.begin(), z.end(), j)) continue;
      if (options.max_work != 0 && ++work > options.max_work) {
        out.stats.work = work;
        out.exhaustive = false;
        return out;
      }
      std::vector<int> next = z;
      next.insert(std::upper_bound(next.begin(), next.end(), j), j);
      auto closed = close(next);
      if (closed && seen.insert(*closed).second) stack.push_back(std::move(*closed));
    }
  }
  out.stats.work = work;
  out.stats.patterns = seen.size();
  for (const auto& z : seen) {
    const int l0 = ns - static_cast<int>(z.size());
    if (options.cap >= 0 && l0 > options.cap) continue;
    const auto flat = SolveFlat(fam, z);
    Record(out, fam, L0Entry{l0, -1, z, GenericPoint(fam, *flat, z)});
  }
  out.exhaustive = true;
  return out;
}

L0Range NonnegRange(const AffineFamily& fam, const L0Options& options) {
  L0Range out;
  out.cap = options.cap;
  const int n = fam.num_params();
  const int ns = fam.num_slots();
  // Bounds first, then slots from the highest monomial down; this order
  // keeps the intermediate cones small for the group families.
  std::vector<polytope::Row> rows;
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> e(n);
    if (fam.params[k].lo) {
      e[k] = 1;
      rows.push_back(IntegerRow(-*fam.params[k].lo, e));
    }
    if (fam.params[k].hi) {
      e[k] = -1;
      rows.push_back(IntegerRow(*fam.params[k].hi, e));
    }
  }
  for (auto it = fam.slots.rbegin(); it != fam.slots.rend(); ++it) {
    rows.push_back(IntegerRow(it->form.constant, DenseWeights(it->form, n)));
  }

  const polytope::VertexSet vs = polytope::EnumerateVertices(rows, n, {options.max_work, options.jobs});
  out.stats.work = vs.work;
  out.stats.max_intermediate_rays = vs.max_intermediate_rays;
  if (!vs.complete) return out;
  if (!vs.bounded) throw UnsupportedError("admissible region is unbounded; add parameter bounds");
  out.stats.vertices = vs.vertices.size();

  const int words = std::max(1, (ns + 63) / 64);
  std::vector<Bits> vbits;
  std::vector<int> vindex;
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  struct Node {
    Bits bits;
    long parent;
    int vertex;
  };
  std::vector<Node> nodes;
  for (std::size_t v = 0; v < vs.vertices.size(); ++v) {
    Bits b(words, 0);
    for (int s = 0; s < ns; ++s) {
      if (fam.slots[s].form.Evaluate(vs.vertices[v]) == 0) b[s / 64] |= std::uint64_t{1} << (s % 64);
    }
    if (options.cap >= 0 && ns - PopCount(b) > options.cap) continue;
    if (index.try_emplace(b, nodes.size()).second) {
      nodes.push_back({b, -1, static_cast<int>(v)});
      vbits.push_back(b);
      vindex.push_back(static_cast<int>(v));
    }
  }
  out.stats.distinct_vertex_patterns = vbits.size();

  std::uint64_t work = vs.work;
  Bits y(words);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    work += vbits.size();
    if (options.max_work != 0 && work > options.max_work) {
      out.stats.work = work;
      return out;
    }
    for (std::size_t j = 0; j < vbits.size(); ++j) {
      bool changed = false;
      for (int q = 0; q < words; ++q) {
        y[q] = nodes[i].bits[q] & vbits[j][q];
        changed |= y[q] != nodes[i].bits[q];
      }
      if (!changed) continue;
      if (options.cap >= 0 && ns - PopCount(y) > options.cap) continue;
      if (index.try_emplace(y, nodes.size()).second) nodes.push_back({y, static_cast<long>(i), vindex[j]});
    }
  }
  out.stats.work = work;
  out.stats.patterns = nodes.size();

  auto witness = [&](std::size_t i) {
    std::vector<long> chain;
    for (long k = static_cast<long>(i); k >= 0; k = nodes[k].parent) chain.push_back(k);
    std::vector<Rational> w = vs.vertices[nodes[chain.back()].vertex];
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
      const auto& v = vs.vertices[nodes[*it].vertex];
      for (int k = 0; k < n; ++k) w[k] = (w[k] + v[k]) / 2;
    }
    return w;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<int> z = BitsToIndices(nodes[i].bits, ns);
    const int l0 = ns - static_cast<int>(z.size());
    const int deg = GDegree(fam, z);
    if (out.achievable.count(l0) && out.by_degree[deg].count(l0)) continue;
    Record(out, fam, L0Entry{l0, deg, std::move(z), witness(i)});
  }
  out.exhaustive = true;
  return out;
}

}  // namespace

PatternResult PatternFeasible(const AffineFamily& fam, std::span<const int> zero_set) {
  const std::vector<int> z = SortedUnique(zero_set, fam.num_slots());
  if (fam.slot_sign == SlotSign::kFree) {
    if (HasBounds(fam)) throw UnsupportedError("sign-free patterns require unbounded parameters");
    return FreePattern(fam, z);
  }
  return NonnegPattern(fam, z);
}

L0Range ComputeL0Range(const AffineFamily& fam, const L0Options& options) {
  return fam.slot_sign == SlotSign::kFree ? FreeRange(fam, options) : NonnegRange(fam, options);
}

}  // namespace invsp
