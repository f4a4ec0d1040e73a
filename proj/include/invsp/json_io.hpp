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

// JSON encodings. Coefficients are rational strings ("7", "-1/2"); keys keep
// insertion order so output is byte-for-byte reproducible.
//
//   polynomial  {"nvars": 3, "terms": [{"e": [1,1,1], "c": "14"}, ...]}
//   group       {"family": "gamma7"} | {"family": "scalar", "m": 4, "n": 2}
//               | {"family": "weighted", "p": 11, "q": 2}
//   family      {"params": [{"name": "U", "lo": null, "hi": null}, ...],
//                "slots": [{"e": [1,1,1], "form": {"const": "14", "U": "-1"}}, ...]}

#ifndef INVSP_JSON_IO_HPP_
#define INVSP_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "invsp/affine_family.hpp"
#include "invsp/gapsearch.hpp"
#include "invsp/groups.hpp"
#include "invsp/polynomial.hpp"
#include "invsp/transform.hpp"
#include "json.hpp"

namespace invsp {

using Json = nlohmann::ordered_json;

// Throws ParseError with "line L, column C" in the message.
Json ParseJson(std::string_view text);

Json ToJson(const Monomial& m);
Json ToJson(const Polynomial& p);
Polynomial PolynomialFromJson(const Json& j);

Json ToJson(const GroupSpec& g);
GroupSpec GroupFromJson(const Json& j);

Json ToJson(const LinearForm& form, const std::vector<std::string>& names);
Json ToJson(const AffineFamily& fam);
AffineFamily FamilyFromJson(const Json& j);

Json PointToJson(const AffineFamily& fam, std::span<const Rational> point);
// {"U": "14", "B": "0", ...}; every parameter must be present.
std::vector<Rational> PointFromJson(const AffineFamily& fam, const Json& j);

Json ToJson(const SpecialReport& r);
Json ToJson(const Witness& w);
Json ToJson(const AchievabilityReport& r);
Json ToJson(const FrobeniusClosure& c);
Json ToJson(const FixtureResult& r);
Json ToJson(const GapTheoremReport& r);
Json ToJson(const TargetSearchReport& r);
Json ToJson(const PatternResult& r, const AffineFamily& fam);
Json ToJson(const L0Range& r, const AffineFamily& fam);

}  // namespace invsp

#endif  // INVSP_JSON_IO_HPP_
