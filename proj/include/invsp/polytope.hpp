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

// Exact vertex enumeration for polytopes given by inequalities, using the
// double description method on the homogenised cone
//
//   { (s, p) : b_i s + a_i . p >= 0,  s >= 0 }.
//
// Extreme rays with s > 0 are the vertices; rays with s = 0 witness
// unboundedness. Adjacency uses the combinatorial test, so degenerate
// inputs are handled without perturbation.

#ifndef INVSP_POLYTOPE_HPP_
#define INVSP_POLYTOPE_HPP_

#include <cstdint>
#include <vector>

#include "invsp/rational.hpp"

namespace invsp::polytope {

struct Budget {
  // Upper bound on adjacency work: candidate pairs examined plus rays
  // scanned by the adjacency test. 0 means unlimited. The outcome does not
  // depend on the number of jobs.
  std::uint64_t max_work = 0;
  int jobs = 1;
};

// Inequality b + a . p >= 0, stored as [b, a_1, ..., a_d].
using Row = std::vector<Integer>;

struct VertexSet {
  std::vector<std::vector<Rational>> vertices;
  bool bounded = true;
  // False when the budget ran out; vertices are then meaningless.
  bool complete = true;
  std::uint64_t work = 0;
  std::size_t max_intermediate_rays = 0;
};

VertexSet EnumerateVertices(const std::vector<Row>& rows, int dim, const Budget& budget = {});

}  // namespace invsp::polytope

#endif  // INVSP_POLYTOPE_HPP_
