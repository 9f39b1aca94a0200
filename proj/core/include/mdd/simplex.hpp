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
#include <vector>

#include "mdd/numeric.hpp"

namespace mdd {

enum class LpStatus { kOptimal, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  Rational objective;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Sparse row of a constraint matrix: (column, coefficient) pairs.
using LpRow = std::vector<std::pair<std::size_t, Rational>>;

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Exact dense tableau simplex with Bland's rule.
LpResult maximize(std::size_t num_vars, const std::vector<LpRow>& rows,
                  const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace mdd
