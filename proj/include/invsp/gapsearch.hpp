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

// Achievable term counts of special polynomials, their gaps, and the
// postage-stamp closure.
//
// Impossibility is always scoped to a degree bound D: a value N missing from
// the exhaustive degree-D sweep is an unconditional gap only when the degree
// estimate for N is at most D.

#ifndef INVSP_GAPSEARCH_HPP_
#define INVSP_GAPSEARCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invsp/affine_family.hpp"
#include "invsp/groups.hpp"
#include "invsp/polynomial.hpp"
#include "invsp/transform.hpp"

namespace invsp {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000'000ULL;

struct SearchBudget {
  std::uint64_t max_work = kDefaultBudget;  // 0 = unlimited
  int jobs = 1;
};

struct Witness {
  Polynomial h;
  Polynomial g;
  int n_terms = 0;
  int g_degree = -1;
};

struct AchievabilityReport {
  GroupSpec group = GroupSpec::Gamma7();
  int degree_bound = 0;
  SignMode sign_mode = SignMode::kNonnegH;
  int cap = -1;  // values above the cap were not enumerated; -1 = none
  std::map<int, Witness> achievable;
  std::map<int, std::set<int>> by_degree;  // degree of G -> values
  std::set<int> proven_gaps;
  // Largest N whose degree estimate is covered by degree_bound (so absence
  // certifies a gap); -1 when no estimate applies.
  int certified_up_to = -1;
  std::optional<int> frontier;
  bool exhaustive = false;
  L0Stats stats;
};

// Exhaustive l0 sweep of the family G = F - H + HF with deg G <= degree_bound.
// Every witness is re-validated end to end; a failing witness throws
// ConsistencyError.
AchievabilityReport AchievableSet(const GroupSpec& g, int degree_bound, SignMode mode,
                                  const SearchBudget& budget = {}, int cap = -1);

// Postage-stamp closure. From a special h and a base witness f with t terms,
// replacing the highest-degree term c*m of h by (1 - lambda) c*m + lambda c*m*f
// gives N(h) + t terms for 0 < lambda < 1 and N(h) + t - 1 for lambda = 1.
struct ClosureStep {
  int parent = 0;      // value the step starts from
  int base_value = 0;  // t
  bool full = false;   // lambda = 1
};

struct FrobeniusClosure {
  std::map<int, Polynomial> base;
  std::map<int, std::optional<ClosureStep>> values;  // nullopt for base values
  int bound = 0;
  // Smallest v with [v, infinity) guaranteed: [v, bound] is covered and long
  // enough to propagate. nullopt if no such v within the bound.
  std::optional<int> frontier;

  bool Contains(int v) const { return values.count(v) > 0; }
  std::set<int> ValueSet() const;
  Polynomial Materialize(int v) const;
};

FrobeniusClosure ComputeFrobeniusClosure(const std::map<int, Polynomial>& base, int bound);
std::set<int> ClosureValues(const std::set<int>& base, int bound);
std::optional<int> ClosureFrontier(const std::set<int>& closure, int min_base, int bound);

struct Fixture {
  std::string key;
  GroupSpec group = GroupSpec::Gamma7();
  Polynomial h;
  int expected_n = 0;
  std::optional<Polynomial> expected_g;
  // Coefficients of G that must come out exactly as given.
  std::vector<std::pair<Monomial, Rational>> expected_coefficients;
};

// The shipped fixtures: the gamma7 list (lambda placeholders at 1/2), the
// alternate N = 51 example, the three-consecutive-terms weighted example and
// the two-variable example with a negative H coefficient.
const std::vector<Fixture>& Fixtures();

struct FixtureResult {
  std::string key;
  bool passed = false;
  int actual_n = 0;
  SpecialReport report;
  std::string diff;  // empty on success
};

FixtureResult VerifyFixture(const Fixture& fixture);
std::vector<FixtureResult> VerifyFixtures(const GroupSpec& g);

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Outcome { kVerified, kFailed, kInconclusive };
std::string ToString(Outcome o);

struct GapTheoremReport {
  GroupSpec group = GroupSpec::Gamma7();
  int degree_bound = 0;
  std::vector<TheoremCheck> checks;
  std::optional<int> min_value;
  std::vector<std::pair<int, int>> gap_intervals;
  std::set<int> undecided;
  std::optional<int> frontier;
  Outcome outcome = Outcome::kInconclusive;
};

struct GapLimits {
  SearchBudget budget;
  int closure_factor = 10;  // closure checked up to factor * N(F)
  int gamma7_degree = 13;
};

GapTheoremReport VerifyGapTheorem(const GroupSpec& g, const GapLimits& limits = {});

enum class TargetStatus { kWitness, kNoWitnessExhaustive, kUnknown };
std::string ToString(TargetStatus s);

struct TargetOutcome {
  int target = 0;
  TargetStatus status = TargetStatus::kUnknown;
  std::optional<Witness> witness;
  int required_degree = -1;     // degree estimate for the target; -1 if none
  bool certified_impossible = false;
};

struct TargetSearchReport {
  GroupSpec group = GroupSpec::Gamma7();
  int degree_bound = 0;
  SignMode sign_mode = SignMode::kNonnegH;
  std::vector<TargetOutcome> targets;
  bool exhaustive = false;
  L0Stats stats;
};

TargetSearchReport SearchTargets(const GroupSpec& g, const std::set<int>& targets, int degree_bound,
                                 SignMode mode, const SearchBudget& budget = {});

// Intervals of consecutive integers in a set.
std::vector<std::pair<int, int>> Intervals(const std::set<int>& values);

}  // namespace invsp

#endif  // INVSP_GAPSEARCH_HPP_
