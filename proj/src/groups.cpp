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

#include "invsp/groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace invsp {
namespace {

int ParseInt(std::string_view field, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("bad integer '" + std::string(field) + "' in group spec '" +
                     std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Monomials of exactly total degree d in n variables, ascending graded-lex.
std::vector<Monomial> MonomialsOfDegree(int n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 1) {
    out.push_back(Monomial{d});
  } else if (n == 2) {
    for (unsigned a = 0; a <= d; ++a) out.push_back(Monomial{a, d - a});
  } else {
    for (unsigned a = 0; a <= d; ++a) {
      for (unsigned b = 0; a + b <= d; ++b) out.push_back(Monomial{a, b, d - a - b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool IsPrime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

GroupSpec GroupSpec::Scalar(int m, int n) {
  if (m < 2) throw UnsupportedError("scalar group needs m >= 2");
  if (n != 1 && n != 2) throw UnsupportedError("scalar group needs source dimension 1 or 2");
  return GroupSpec(GroupFamily::kScalar, m, std::vector<int>(n, 1));
}

GroupSpec GroupSpec::Weighted(int p, int q) {
  if (p < 3 || p % 2 == 0) throw UnsupportedError("weighted group needs odd p >= 3");
  if (q < 1 || std::gcd(p, q) != 1) throw UnsupportedError("weighted group needs gcd(p, q) = 1");
  return GroupSpec(GroupFamily::kWeighted, p, {1, q});
}

GroupSpec GroupSpec::Gamma7() { return GroupSpec(GroupFamily::kGamma7, 7, {1, 2, 4}); }

GroupSpec GroupSpec::Parse(std::string_view text) {
  const auto parts = Split(text, ':');
  if (parts[0] == "gamma7" && parts.size() == 1) return Gamma7();
  if (parts[0] == "scalar" && parts.size() == 3) {
    return Scalar(ParseInt(parts[1], text), ParseInt(parts[2], text));
  }
  if (parts[0] == "weighted" && parts.size() == 3) {
    return Weighted(ParseInt(parts[1], text), ParseInt(parts[2], text));
  }
  throw ParseError("unrecognised group spec '" + std::string(text) +
                   "' (expected scalar:<m>:<n>, weighted:<p>:<q> or gamma7)");
}

std::string GroupSpec::ToString() const {
  switch (family_) {
    case GroupFamily::kScalar:
      return "scalar:" + std::to_string(order_) + ":" + std::to_string(source_dim());
    case GroupFamily::kWeighted:
      return "weighted:" + std::to_string(order_) + ":" + std::to_string(q());
    case GroupFamily::kGamma7:
      return "gamma7";
  }
  return {};
}

bool IsInvariantMonomial(const GroupSpec& g, const Monomial& m) {
  if (m.nvars() != g.source_dim()) {
    throw DimensionError("monomial has " + std::to_string(m.nvars()) + " variables, group acts on " +
                         std::to_string(g.source_dim()));
  }
  long weighted = 0;
  for (int i = 0; i < m.nvars(); ++i) weighted += static_cast<long>(m[i]) * g.weights()[i];
  return weighted % g.order() == 0;
}

bool IsInvariant(const GroupSpec& g, const Polynomial& f) {
  if (f.nvars() != g.source_dim()) throw DimensionError("polynomial dimension does not match group");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return IsInvariantMonomial(g, term.first); });
}

std::vector<Monomial> EnumerateInvariantMonomials(const GroupSpec& g, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 1; d <= max_degree; ++d) {
    for (const Monomial& m : MonomialsOfDegree(g.source_dim(), d)) {
      if (IsInvariantMonomial(g, m)) out.push_back(m);
    }
  }
  return out;
}

std::vector<Monomial> AlgebraGenerators(const GroupSpec& g) {
  switch (g.family()) {
    case GroupFamily::kScalar:
      return MonomialsOfDegree(g.source_dim(), g.order());
    case GroupFamily::kWeighted: {
      if (g.q() == 1) return MonomialsOfDegree(2, g.order());
      if (g.q() != 2) {
        throw UnsupportedError("no generator list for weighted groups with q = " +
                               std::to_string(g.q()));
      }
      const unsigned p = g.order();
      std::vector<Monomial> out{Monomial{p, 0}, Monomial{0, p}};
      for (unsigned j = 1; j <= static_cast<unsigned>(g.r()); ++j) out.push_back(Monomial{p - 2 * j, j});
      std::sort(out.begin(), out.end());
      return out;
    }
    case GroupFamily::kGamma7: {
      std::vector<Monomial> out{{7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {5, 1, 0}, {3, 2, 0}, {1, 3, 0},
                                {3, 0, 1}, {0, 5, 1}, {0, 3, 2}, {0, 1, 3}, {1, 1, 1}};
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

}  // namespace invsp
