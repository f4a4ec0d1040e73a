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

#ifndef INVSP_RATIONAL_HPP_
#define INVSP_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace invsp {

using Rational = mpq_class;
using Integer = mpz_class;

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different numbers of variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// The request is outside what the library supports (group family, prime
// requirement, dimension, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed. Never expected; signals a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Parses "p" or "p/q" (optional leading '-') into a canonical rational.
// Decimal points and exponents are rejected.
Rational ParseRational(std::string_view text);

// Canonical "p" or "p/q" with q > 1.
std::string ToString(const Rational& q);

inline int Sign(const Rational& q) { return sgn(q); }

}  // namespace invsp

#endif  // INVSP_RATIONAL_HPP_
