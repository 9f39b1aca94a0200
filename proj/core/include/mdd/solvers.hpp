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
#include <optional>
#include <vector>

#include "mdd/item_set.hpp"
#include "mdd/sadp.hpp"
#include "mdd/valuation.hpp"

namespace mdd {

struct OdpResult {
  ItemSet set;
  Value value = 0;
};

/// max_S v(S) - w(S) over all subsets; the lexicographically smallest
/// optimizer, which is the empty set whenever nothing beats 0.
OdpResult brute_force_odp(const Valuation& v, const Valuation& w, std::size_t cap = kDefaultEnumCap);

/// Optimal consecutive gaps g_l = max_T v_l(T) - v_{l+1}(T), l = 1..k-1.
struct SadpGaps {
  std::vector<Value> gaps;
  std::vector<ItemSet> argmax;  // lexicographically smallest optimizer
  Value last_full = 0;          // v_k(full ground)
};

SadpGaps sadp_gaps(const SADPInstance& inst, std::size_t cap = kDefaultEnumCap);

struct SadpEvaluation {
  std::vector<Value> numerators;  // v_l(S) - v_{l+1}(S)
  std::vector<Value> gaps;
  /// numerator / gap; 1 when both are 0, undefined when only the gap is 0.
  std::vector<std::optional<Rational>> ratios;
  std::optional<std::size_t> best_index;  // 1-based
  Rational best_ratio;
};

SadpEvaluation sadp_eval(const SADPInstance& inst, const ItemSet& s,
                         std::size_t cap = kDefaultEnumCap);
SadpEvaluation sadp_eval(const SadpGaps& gaps, const SADPInstance& inst, const ItemSet& s);

struct LotteryEntry {
  ItemSet set;
  Rational probability;
};

struct MenuEntry {
  std::vector<LotteryEntry> lottery;
  Rational price;
};

/// One entry per type, in distribution order. The null option (empty set at
/// price 0) is always available.
struct Menu {
  std::vector<MenuEntry> entries;
};

/// Sorts lottery entries by set and merges duplicates.
Menu canonical(Menu menu);

struct MenuSolution {
  Menu menu;
  Rational revenue;
  std::size_t pivots = 0;
};

/// Revenue-optimal lottery menu over all 2^m sets, with IC and IR.
MenuSolution lp_optimal_mdmdp(const TypeDistribution& d, std::size_t cap = kDefaultLpCap);

struct TrivialBundle {
  Menu menu;
  /// Expected revenue when every type buys its preferred option.
  Rational revenue;
  /// max_v Pr[v] v(full): the revenue collected from the targeted type.
  Rational targeted_bound;
  std::size_t target = 0;
  Value price = 0;
};

TrivialBundle trivial_bundle_menu(const TypeDistribution& d);

struct MenuResiduals {
  Rational max_ic_violation;
  Rational max_ir_violation;
  Rational revenue;
  bool lotteries_valid = true;
};

MenuResiduals verify_menu(const TypeDistribution& d, const Menu& menu);

struct ApproxReport {
  Rational achieved;
  Rational optimum;
  Rational ratio;  // 1 when optimum is 0
  ItemSet witness;
};

ApproxReport approx_report(const Rational& achieved, const Rational& optimum, ItemSet witness);

}  // namespace mdd
