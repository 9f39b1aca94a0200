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
#include <cstdint>
#include <string_view>
#include <vector>

#include "mdd/item_set.hpp"
#include "mdd/valuation.hpp"

namespace mdd {

/// C(n, k); throws ArithmeticOverflow past 2^64.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// 1-based lexicographic rank of `s` among the subsets of [0, m) with |s| members.
std::uint64_t subset_rank(std::size_t m, const ItemSet& s);
/// Inverse of subset_rank for subsets of the given size.
ItemSet subset_unrank(std::size_t m, std::size_t size, std::uint64_t rank);

/// Base valuation whose value drops by one on each of x designated sets
/// without leaving the class. Here: the binary OXS family on m items.
struct PerturbableFamily {
  Valuation base;
  std::size_t m = 0;
  std::uint64_t x = 0;  // C(m, m/2) perturbing sets: all sets of size m/2
  Value y = 0;          // base value of the full set, m/2
};

/// Complete bipartite graph, m items on the left, m/2 unit-weight right
/// nodes: base(S) = min(|S|, m/2).
PerturbableFamily boxs_family(std::size_t m);

/// Binary OXS perturbation: delete the edges from every item in `s` to
/// right node 0. Requires |s| = m/2.
Valuation perturb(const PerturbableFamily& family, const ItemSet& s);

/// The same perturbation as a pointwise wrapper over the base valuation.
Valuation perturb_pointwise(const PerturbableFamily& family, const ItemSet& s);

/// Lowers the base value by one on the perturbing set of rank r exactly when
/// r <= 2^num_vars and the assignment with bits r-1 satisfies `cnf`.
Valuation sat_perturbed_valuation(const PerturbableFamily& family, Cnf cnf);

/// Perturbing sets whose encoded assignment satisfies `cnf`.
std::vector<ItemSet> satisfied_perturbing_sets(const PerturbableFamily& family, const Cnf& cnf);

/// DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0).
Cnf parse_dimacs(std::string_view text);

/// The 4-item monotone submodular table on items a,b,c,d = 0,1,2,3 whose
/// truncation at two items is not submodular.
Valuation appendix_counterexample();

}  // namespace mdd
