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

// Affine families of coefficient vectors.
//
// For a group with basic polynomial F, let H range over invariant
// polynomials of bounded degree with symbolic coefficients (the
// parameters). Every coefficient of G = F - H + H*F is then an affine form in
// the parameters; each such coefficient is a "slot". The number of terms of
// G is the number of slots that do not vanish, i.e. the l0 norm of an affine
// map evaluated at the parameter point.
//
// Families can also be given directly (a list of affine forms without
// monomials), which covers small hand-made maps.

#ifndef INVSP_AFFINE_FAMILY_HPP_
#define INVSP_AFFINE_FAMILY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invsp/groups.hpp"
#include "invsp/polynomial.hpp"

namespace invsp {

struct LinearForm {
  Rational constant;
  std::map<int, Rational> weights;  // parameter index -> nonzero weight

  void AddWeight(int param, const Rational& w);
  Rational Evaluate(std::span<const Rational> point) const;
  bool is_zero() const { return constant == 0 && weights.empty(); }
  // True for a form w * p with w > 0 and no constant.
  bool IsLoneParameter(int* param = nullptr) const;
  // e.g. "14 - U", "7*B + 7*D", "7 + 14*U - V".
  std::string ToString(std::span<const std::string> names) const;
  bool operator==(const LinearForm&) const = default;
};

struct Parameter {
  std::string name;
  std::optional<Monomial> monomial;  // the H monomial it multiplies, if any
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

struct Slot {
  std::optional<Monomial> monomial;
  std::string label;
  LinearForm form;
};

// kNonneg: every slot must be >= 0, and a "nonzero" slot is a positive one.
// kFree: slots may take either sign.
enum class SlotSign { kNonneg, kFree };

// kNonnegH: parameters that appear alone as some slot are bounded below by
//   0; for the scalar family in two variables every H coefficient is.
// kSignedH: parameters are unbounded.
enum class SignMode { kNonnegH, kSignedH };

struct AffineFamily {
  std::vector<Parameter> params;
  std::vector<Slot> slots;
  SlotSign slot_sign = SlotSign::kNonneg;
  std::optional<GroupSpec> group;
  int h_degree = -1;

  int num_params() const { return static_cast<int>(params.size()); }
  int num_slots() const { return static_cast<int>(slots.size()); }
  // Throws Error when absent.
  int ParamIndex(std::string_view name) const;
  std::vector<std::string> ParamNames() const;
};

AffineFamily BuildCoefficientFamily(const GroupSpec& g, int h_degree, SignMode mode);

// Canonical parameter names. gamma7 uses the letters
//   U xyz, B yz^3, C xy^3, D x^3z, R y^3z^2, S x^2z^3, T x^3y^2,
//   K y^5z, L xz^5, M x^5y, V x^2y^2z^2
// (under x->y->z->x the orbits are B->D->C, R->S->T, K->L->M). The weighted
// family's x^{p-2j} y^j is lambda_j; anything else is h_<exponents>.
std::string CanonicalParamName(const GroupSpec& g, const Monomial& m);

// Dense point from named values; throws Error if a parameter is missing or
// an unknown name is given.
std::vector<Rational> PointFromNamed(const AffineFamily& fam, const std::map<std::string, Rational>& named);

std::vector<Rational> EvaluateSlots(const AffineFamily& fam, std::span<const Rational> point);

// Polynomial of the nonzero slots. Requires monomial slots.
Polynomial Instantiate(const AffineFamily& fam, std::span<const Rational> point);

// H = sum of parameter * monomial. Requires monomial parameters.
Polynomial HFromPoint(const AffineFamily& fam, std::span<const Rational> point);

// Whether point respects the parameter bounds and, for kNonneg families,
// makes every slot non-negative.
bool IsAdmissible(const AffineFamily& fam, std::span<const Rational> point);

struct PatternResult {
  std::vector<int> zero_set;  // sorted slot indices
  bool feasible = false;
  std::vector<Rational> witness;
  int l0 = 0;
};

// Is there an admissible point where exactly the zero_set slots vanish?
// kNonneg families: exact LP  max t  s.t.  zero slots = 0, other slots >= t,
// bounds, t <= 1; feasible iff t* > 0. kFree families (unbounded parameters
// only): exact linear algebra on the flat cut out by the zero slots.
PatternResult PatternFeasible(const AffineFamily& fam, std::span<const int> zero_set);

struct L0Options {
  // Only l0 values <= cap are enumerated; -1 means all.
  int cap = -1;
  std::uint64_t max_work = 0;  // 0 = unlimited
  int jobs = 1;
};

struct L0Entry {
  int l0 = 0;
  int g_degree = -1;  // largest degree among nonzero monomial slots
  std::vector<int> zero_set;
  std::vector<Rational> witness;
};

struct L0Stats {
  std::size_t vertices = 0;
  std::size_t distinct_vertex_patterns = 0;
  std::size_t patterns = 0;  // distinct achievable zero sets found (within cap)
  std::uint64_t work = 0;
  std::size_t max_intermediate_rays = 0;
};

struct L0Range {
  std::map<int, L0Entry> achievable;                   // l0 -> one witness
  std::map<int, std::map<int, L0Entry>> by_degree;     // g_degree -> l0 -> witness
  int cap = -1;
  bool exhaustive = false;
  L0Stats stats;

  bool Contains(int l0) const { return achievable.count(l0) > 0; }
};

// All achievable l0 values (up to the cap). For kNonneg families the
// feasible region is a polytope; the zero set at any point is the tight set
// of the face containing it, and face tight sets are exactly the
// intersections of vertex tight sets. Vertices come from exact double
// description; the intersection closure is pruned at the cap because
// intersecting only removes zeros.
L0Range ComputeL0Range(const AffineFamily& fam, const L0Options& options = {});

}  // namespace invsp

#endif  // INVSP_AFFINE_FAMILY_HPP_
