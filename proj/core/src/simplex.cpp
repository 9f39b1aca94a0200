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

#include "mdd/simplex.hpp"

namespace mdd {

LpResult maximize(std::size_t num_vars, const std::vector<LpRow>& rows,
                  const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = rows.size();
  if (b.size() != m) throw InvalidArgument("lp: right-hand side length mismatch");
  if (c.size() != num_vars) throw InvalidArgument("lp: objective length mismatch");
  const std::size_t n = num_vars + m;  // structural then slack columns

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0) throw InvalidArgument("lp: negative right-hand side");
    for (const auto& [col, coef] : rows[r]) {
      if (col >= num_vars) throw InvalidArgument("lp: column index out of range");
      t[r][col] += coef;
    }
    t[r][num_vars + r] = 1;
    t[r][n] = b[r];
    basis[r] = num_vars + r;
  }
  // Reduced costs of the maximization; objective value in z[n].
  std::vector<Rational> z(n + 1);
  for (std::size_t j = 0; j < num_vars; ++j) z[j] = c[j];

  LpResult out;
  Rational ratio, best, factor;
  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(z[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      ratio = t[r][n] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) {
      out.status = LpStatus::kUnbounded;
      return out;
    }

    auto& prow = t[leave];
    const Rational pivot = prow[enter];
    for (auto& x : prow) {
      if (sgn(x) != 0) x /= pivot;
    }
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= n; ++j) {
      if (sgn(prow[j]) != 0) nonzero.push_back(j);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      factor = t[r][enter];
      for (std::size_t j : nonzero) t[r][j] -= factor * prow[j];
    }
    if (sgn(z[enter]) != 0) {
      factor = z[enter];
      for (std::size_t j : nonzero) z[j] -= factor * prow[j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.x.assign(num_vars, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < num_vars) out.x[basis[r]] = t[r][n];
  }
  out.objective = -z[n];
  return out;
}

}  // namespace mdd
