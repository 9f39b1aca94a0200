// Copyright 2026 The mdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mdd/numeric.hpp"

namespace mdd {

/// Non-negative rectangular weight grid, row-major.
class BipartiteWeights {
 public:
  BipartiteWeights(std::size_t rows, std::size_t cols);
  explicit BipartiteWeights(const std::vector<std::vector<Rational>>& grid);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t r, std::size_t c) const { return w_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Rational value);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> w_;
};

/// (row, col) pairs, each row and column used at most once.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct MatchingResult {
  Matching matching;
  Rational weight;
};

/// Exact maximum-weight matching (not necessarily perfect).
MatchingResult max_weight_matching(const BipartiteWeights& w);

/// Throws InvalidArgument for out-of-range or non-injective pairs.
Rational matching_weight(const BipartiteWeights& w, const Matching& m);

/// True iff `m` is a maximum-weight matching of `w` (ties count).
bool attains_max(const BipartiteWeights& w, const Matching& m);

namespace detail {

/// Hungarian method with potentials on an n x n cost grid (row-major),
/// minimizing total cost. Returns col_of_row. Only additions and
/// comparisons are used, so exact types stay exact.
template <typename T>
std::vector<std::size_t> min_cost_assignment(const std::vector<T>& cost, std::size_t n) {
  std::vector<T> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<bool> minv_finite(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv_finite.begin(), minv_finite.end(), false);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      T delta{};
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (!minv_finite[j] || cur < minv[j]) {
          minv[j] = cur;
          minv_finite[j] = true;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (minv_finite[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(n);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[p[j] - 1] = j - 1;
  return col_of_row;
}

/// Max-weight matching value of a non-negative integer grid (OXS fast path).
Value max_weight_matching_value(const std::vector<Value>& weights, std::size_t rows,
                                std::size_t cols);

}  // namespace detail

}  // namespace mdd
