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

// The three cyclic group families acting diagonally by roots of unity:
//
//   scalar:m:n    eta * I on C^n, n in {1, 2}
//   weighted:p:q  eta (+) eta^q on C^2, p odd, gcd(p, q) = 1
//   gamma7        eta (+) eta^2 (+) eta^4 on C^3, eta a 7th root of unity
//
// A monomial x^a y^b z^c is invariant iff its weighted exponent sum is
// divisible by the group order. Invariance is always decided by that
// congruence, never by evaluating roots of unity.

#ifndef INVSP_GROUPS_HPP_
#define INVSP_GROUPS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "invsp/polynomial.hpp"

namespace invsp {

enum class GroupFamily { kScalar, kWeighted, kGamma7 };

class GroupSpec {
 public:
  static GroupSpec Scalar(int m, int n);
  static GroupSpec Weighted(int p, int q);
  static GroupSpec Gamma7();
  // "scalar:<m>:<n>", "weighted:<p>:<q>" or "gamma7".
  static GroupSpec Parse(std::string_view text);

  GroupFamily family() const { return family_; }
  int order() const { return order_; }
  int source_dim() const { return static_cast<int>(weights_.size()); }
  // Exponent of eta on each coordinate.
  const std::vector<int>& weights() const { return weights_; }
  // Only meaningful for the weighted family.
  int q() const { return family_ == GroupFamily::kWeighted ? weights_[1] : 1; }
  // r with p = 2r + 1, for the weighted family.
  int r() const { return (order_ - 1) / 2; }

  std::string ToString() const;
  bool operator==(const GroupSpec&) const = default;

 private:
  GroupSpec(GroupFamily family, int order, std::vector<int> weights)
      : family_(family), order_(order), weights_(std::move(weights)) {}

  GroupFamily family_;
  int order_;
  std::vector<int> weights_;
};

bool IsInvariantMonomial(const GroupSpec& g, const Monomial& m);
bool IsInvariant(const GroupSpec& g, const Polynomial& f);

// All non-constant invariant monomials of total degree <= max_degree, in
// ascending graded-lex order.
std::vector<Monomial> EnumerateInvariantMonomials(const GroupSpec& g, int max_degree);

// Monomial generators of the invariant algebra (besides 1). Refused for the
// weighted family with q other than 1 or 2.
std::vector<Monomial> AlgebraGenerators(const GroupSpec& g);

bool IsPrime(long n);

}  // namespace invsp

#endif  // INVSP_GROUPS_HPP_
