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

#include "mdd/matching.hpp"

#include <algorithm>

namespace mdd {

BipartiteWeights::BipartiteWeights(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), w_(rows * cols) {}

BipartiteWeights::BipartiteWeights(const std::vector<std::vector<Rational>>& grid)
    : rows_(grid.size()), cols_(grid.empty() ? 0 : grid[0].size()) {
  w_.reserve(rows_ * cols_);
  for (const auto& row : grid) {
    if (row.size() != cols_) throw InvalidArgument("weight grid is not rectangular");
    for (const auto& x : row) {
      if (x < 0) throw InvalidArgument("negative matching weight");
      w_.push_back(x);
      w_.back().canonicalize();
    }
  }
}

void BipartiteWeights::set(std::size_t r, std::size_t c, Rational value) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("weight index out of range");
  if (value < 0) throw InvalidArgument("negative matching weight");
  value.canonicalize();
  w_[r * cols_ + c] = std::move(value);
}

MatchingResult max_weight_matching(const BipartiteWeights& w) {
  const std::size_t n = std::max(w.rows(), w.cols());
  MatchingResult out;
  if (n == 0) return out;
  // Pad with zero weights; a max-weight perfect assignment of the padded
  // grid restricted to real cells is a max-weight matching.
  std::vector<Rational> cost(n * n);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) cost[r * n + c] = -w.at(r, c);
  }
  const auto col_of_row = detail::min_cost_assignment(cost, n);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const std::size_t c = col_of_row[r];
    if (c < w.cols()) {
      out.matching.pairs.emplace_back(r, c);
      out.weight += w.at(r, c);
    }
  }
  return out;
}

Rational matching_weight(const BipartiteWeights& w, const Matching& m) {
  std::vector<bool> row_used(w.rows()), col_used(w.cols());
  Rational total;
  for (const auto& [r, c] : m.pairs) {
    if (r >= w.rows() || c >= w.cols()) throw InvalidArgument("matching pair out of range");
    if (row_used[r] || col_used[c]) throw InvalidArgument("matching reuses a row or column");
    row_used[r] = col_used[c] = true;
    total += w.at(r, c);
  }
  return total;
}

bool attains_max(const BipartiteWeights& w, const Matching& m) {
  return matching_weight(w, m) == max_weight_matching(w).weight;
}

namespace detail {

Value max_weight_matching_value(const std::vector<Value>& weights, std::size_t rows,
                                std::size_t cols) {
  const std::size_t n = std::max(rows, cols);
  if (n == 0) return 0;
  std::vector<Value> cost(n * n, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) cost[r * n + c] = -weights[r * cols + c];
  }
  const auto col_of_row = min_cost_assignment(cost, n);
  Value total = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (col_of_row[r] < cols) total = checked_add(total, weights[r * cols + col_of_row[r]]);
  }
  return total;
}

}  // namespace detail

}  // namespace mdd
