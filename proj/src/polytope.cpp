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

#include "invsp/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace invsp::polytope {
namespace {

using Ray = std::vector<Integer>;

void MakePrimitive(Ray& ray) {
  Integer g = 0;
  for (const auto& v : ray) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& v : ray) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

Integer Dot(const Row& row, const Ray& ray) {
  Integer acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0 && ray[i] != 0) mpz_addmul(acc.get_mpz_t(), row[i].get_mpz_t(), ray[i].get_mpz_t());
  }
  return acc;
}

// Zero sets of all rays, W words per ray, in one flat buffer.
class ZeroSets {
 public:
  explicit ZeroSets(int words) : words_(words) {}
  std::size_t size() const { return bits_.size() / words_; }
  const std::uint64_t* at(std::size_t k) const { return bits_.data() + k * words_; }
  std::uint64_t* at(std::size_t k) { return bits_.data() + k * words_; }
  std::uint64_t* Append() {
    bits_.resize(bits_.size() + words_, 0);
    return at(size() - 1);
  }
  void Clear() { bits_.clear(); }
  int words() const { return words_; }

 private:
  int words_;
  std::vector<std::uint64_t> bits_;
};

void SetBit(std::uint64_t* set, int bit) { set[bit / 64] |= std::uint64_t{1} << (bit % 64); }

// Returns rows of an invertible D x D submatrix (by index) or an empty vector
// when the rows do not span.
std::vector<int> ChooseBasis(const std::vector<Row>& rows, int dim) {
  std::vector<std::vector<Rational>> echelon;  // reduced rows with pivot columns
  std::vector<int> pivots;
  std::vector<int> chosen;
  for (int i = 0; i < static_cast<int>(rows.size()) && static_cast<int>(chosen.size()) < dim; ++i) {
    std::vector<Rational> v(rows[i].begin(), rows[i].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const int pc = pivots[k];
      if (v[pc] == 0) continue;
      const Rational f = v[pc] / echelon[k][pc];
      for (int j = 0; j < dim; ++j) v[j] -= f * echelon[k][j];
    }
    int pc = -1;
    for (int j = 0; j < dim; ++j) {
      if (v[j] != 0) {
        pc = j;
        break;
      }
    }
    if (pc < 0) continue;
    echelon.push_back(std::move(v));
    pivots.push_back(pc);
    chosen.push_back(i);
  }
  if (static_cast<int>(chosen.size()) < dim) return {};
  return chosen;
}

// Columns of the inverse of the chosen rows, as primitive integer rays.
std::vector<Ray> InverseColumns(const std::vector<Row>& rows, const std::vector<int>& chosen, int dim) {
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(2 * dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m[i][j] = rows[chosen[i]][j];
    m[i][dim + i] = 1;
  }
  for (int c = 0; c < dim; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (int i = 0; i < dim; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < 2 * dim; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Ray> rays(dim, Ray(dim));
  for (int k = 0; k < dim; ++k) {
    Integer lcm = 1;
    for (int i = 0; i < dim; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][dim + k].get_den_mpz_t());
    for (int i = 0; i < dim; ++i) {
      Rational scaled = m[i][dim + k] * lcm;
      rays[k][i] = scaled.get_num();
    }
    MakePrimitive(rays[k]);
  }
  return rays;
}

struct PairTask {
  const std::vector<Ray>* rays;
  const ZeroSets* zeros;
  const std::vector<Integer>* values;
  int need;  // minimum common zero count
  int row_index;
  std::atomic<std::uint64_t>* work;
  std::uint64_t limit;  // 0 = unlimited
};

struct NewRay {
  Ray ray;
  std::vector<std::uint64_t> zero;
};

void CombinePairs(const PairTask& task, const std::vector<std::size_t>& pos, const std::vector<std::size_t>& neg,
                  std::size_t begin, std::size_t end, std::vector<NewRay>& out) {
  const int w = task.zeros->words();
  std::vector<std::uint64_t> common(w);
  const std::size_t n = task.rays->size();
  for (std::size_t a = begin; a < end; ++a) {
    if (task.limit != 0 && task.work->load(std::memory_order_relaxed) > task.limit) return;
    std::uint64_t local = 0;
    const std::size_t i = pos[a];
    const std::uint64_t* zi = task.zeros->at(i);
    for (std::size_t j : neg) {
      const std::uint64_t* zj = task.zeros->at(j);
      int count = 0;
      for (int q = 0; q < w; ++q) {
        common[q] = zi[q] & zj[q];
        count += std::popcount(common[q]);
      }
      ++local;
      if (count < task.need) continue;
      bool adjacent = true;
      for (std::size_t k = 0; k < n && adjacent; ++k) {
        if (k == i || k == j) continue;
        ++local;
        const std::uint64_t* zk = task.zeros->at(k);
        bool superset = true;
        for (int q = 0; q < w; ++q) {
          if ((zk[q] & common[q]) != common[q]) {
            superset = false;
            break;
          }
        }
        if (superset) adjacent = false;
      }
      if (!adjacent) continue;
      const Integer& vi = (*task.values)[i];  // > 0
      const Integer& vj = (*task.values)[j];  // < 0
      NewRay nr;
      nr.ray.resize((*task.rays)[i].size());
      for (std::size_t c = 0; c < nr.ray.size(); ++c) {
        nr.ray[c] = vi * (*task.rays)[j][c] - vj * (*task.rays)[i][c];
      }
      MakePrimitive(nr.ray);
      nr.zero = common;
      SetBit(nr.zero.data(), task.row_index);
      out.push_back(std::move(nr));
    }
    task.work->fetch_add(local, std::memory_order_relaxed);
  }
}

}  // namespace

VertexSet EnumerateVertices(const std::vector<Row>& input_rows, int dim, const Budget& budget) {
  VertexSet result;
  const int big_d = dim + 1;
  if (dim == 0) {
    const bool feasible =
        std::all_of(input_rows.begin(), input_rows.end(), [](const Row& r) { return r[0] >= 0; });
    if (feasible) result.vertices.emplace_back();
    return result;
  }

  // Row 0 is s >= 0.
  std::vector<Row> rows;
  rows.push_back(Row(big_d));
  rows[0][0] = 1;
  for (const Row& r : input_rows) {
    if (static_cast<int>(r.size()) != big_d) throw DimensionError("inequality row has the wrong length");
    rows.push_back(r);
  }
  const int nrows = static_cast<int>(rows.size());
  const int words = (nrows + 63) / 64;

  const std::vector<int> chosen = ChooseBasis(rows, big_d);
  if (chosen.empty()) {
    result.bounded = false;
    return result;
  }
  std::vector<Ray> rays = InverseColumns(rows, chosen, big_d);
  ZeroSets zeros(words);
  for (int k = 0; k < big_d; ++k) {
    std::uint64_t* z = zeros.Append();
    for (int i = 0; i < big_d; ++i) {
      if (i != k) SetBit(z, chosen[i]);
    }
  }
  std::vector<bool> done(nrows, false);
  for (int c : chosen) done[c] = true;

  const int jobs = std::max(1, budget.jobs);
  std::atomic<std::uint64_t> work{0};
  for (int row_index = 0; row_index < nrows; ++row_index) {
    if (done[row_index]) continue;
    const Row& row = rows[row_index];
    std::vector<Integer> values(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    std::vector<std::size_t> zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      values[k] = Dot(row, rays[k]);
      const int s = sgn(values[k]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(k);
    }

    std::vector<NewRay> created;
    if (!pos.empty() && !neg.empty()) {
      PairTask task{&rays, &zeros, &values, big_d - 2, row_index, &work, budget.max_work};
      if (jobs == 1 || pos.size() < 2) {
        CombinePairs(task, pos, neg, 0, pos.size(), created);
      } else {
        const int t = std::min<int>(jobs, static_cast<int>(pos.size()));
        std::vector<std::vector<NewRay>> parts(t);
        std::vector<std::thread> threads;
        for (int w = 0; w < t; ++w) {
          const std::size_t b = pos.size() * w / t;
          const std::size_t e = pos.size() * (w + 1) / t;
          threads.emplace_back([&, b, e, w] { CombinePairs(task, pos, neg, b, e, parts[w]); });
        }
        for (auto& th : threads) th.join();
        for (auto& part : parts) {
          for (auto& nr : part) created.push_back(std::move(nr));
        }
      }
    }
    result.work = work.load();
    if (budget.max_work != 0 && result.work > budget.max_work) {
      result.complete = false;
      return result;
    }

    std::vector<Ray> next_rays;
    ZeroSets next_zeros(words);
    next_rays.reserve(pos.size() + zero.size() + created.size());
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (sgn(values[k]) < 0) continue;
      std::uint64_t* z = next_zeros.Append();
      std::copy(zeros.at(k), zeros.at(k) + words, z);
      if (values[k] == 0) SetBit(z, row_index);
      next_rays.push_back(std::move(rays[k]));
    }
    for (auto& nr : created) {
      std::uint64_t* z = next_zeros.Append();
      std::copy(nr.zero.begin(), nr.zero.end(), z);
      next_rays.push_back(std::move(nr.ray));
    }
    rays = std::move(next_rays);
    zeros = std::move(next_zeros);
    done[row_index] = true;
    result.max_intermediate_rays = std::max(result.max_intermediate_rays, rays.size());
  }

  for (const Ray& ray : rays) {
    if (ray[0] == 0) {
      result.bounded = false;
      continue;
    }
    std::vector<Rational> v(dim);
    for (int i = 0; i < dim; ++i) {
      v[i] = Rational(ray[i + 1], ray[0]);
      v[i].canonicalize();
    }
    result.vertices.push_back(std::move(v));
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

}  // namespace invsp::polytope
