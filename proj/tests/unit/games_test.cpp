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

#include <gtest/gtest.h>

#include <cmath>

#include "mdd/games.hpp"
#include "mdd/instances.hpp"

namespace mdd {
namespace {

TEST(TheoreticalBound, Values) {
  EXPECT_EQ(theoretical_bound(0, 70), make_rational(1, 70));
  EXPECT_EQ(theoretical_bound(10, 70), make_rational(67, 420));
  EXPECT_THROW(theoretical_bound(70, 70), InvalidArgument);
}

TEST(IsolatingPrices, BaseDemandsExactlyT) {
  const PerturbableFamily f = boxs_family(6);
  for (std::uint64_t r = 1; r <= f.x; ++r) {
    const ItemSet t = subset_unrank(6, 3, r);
    const auto p = isolating_prices(6, t);
    EXPECT_EQ(demand(f.base, p), t);
    EXPECT_NE(demand(perturb(f, t), p), t);
    const ItemSet other = subset_unrank(6, 3, r == 1 ? 2 : 1);
    EXPECT_EQ(demand(perturb(f, other), p), t);
  }
}

TEST(ValueOracle, CountsAndEnforcesBudget) {
  const PerturbableFamily f = boxs_family(4);
  const auto table = tabulate(f.base);
  const ItemSet hidden(4, {1, 2});
  ValueOracle o(f, hidden, table, 2);
  EXPECT_EQ(o.query(hidden), 1);
  EXPECT_EQ(o.query(ItemSet(4, {0, 1})), 2);
  EXPECT_EQ(o.used(), 2u);
  EXPECT_THROW(o.query(ItemSet(4)), BudgetExceeded);
}

TEST(DemandOracle, RevealsHiddenSetUnderIsolatingPrices) {
  const PerturbableFamily f = boxs_family(4);
  const ItemSet hidden(4, {0, 3});
  const DemandSolver solver(4);
  DemandOracle o(solver, tabulate(perturb(f, hidden)), 3);
  EXPECT_NE(o.query(isolating_prices(4, hidden)), hidden);
  EXPECT_EQ(o.query(isolating_prices(4, ItemSet(4, {0, 1}))), ItemSet(4, {0, 1}));
  EXPECT_EQ(o.used(), 2u);
}

TEST(Games, DeterministicPerSeed) {
  const PerturbableFamily f = boxs_family(6);
  RandomProber a, b;
  const GameTranscript t1 = run_value_game(a, f, 5, 200, 9);
  const GameTranscript t2 = run_value_game(b, f, 5, 200, 9);
  EXPECT_EQ(t1.hidden_ranks, t2.hidden_ranks);
  EXPECT_EQ(t1.successes, t2.successes);
  const GameTranscript t3 = run_value_game(a, f, 5, 200, 10);
  EXPECT_NE(t1.hidden_ranks, t3.hidden_ranks);
}

TEST(Games, TranscriptFields) {
  const PerturbableFamily f = boxs_family(4);
  ZeroQueryGuesser z;
  const GameTranscript t = run_demand_game(z, f, 0, 300, 3);
  EXPECT_EQ(t.game, "demand");
  EXPECT_EQ(t.algorithm, "zero-query");
  EXPECT_EQ(t.x, 6u);
  EXPECT_EQ(t.query_counts.size(), 300u);
  for (auto q : t.query_counts) EXPECT_EQ(q, 0u);
  for (auto r : t.hidden_ranks) {
    EXPECT_GE(r, 1u);
    EXPECT_LE(r, 6u);
  }
  std::uint64_t ones = 0;
  for (auto r : t.hidden_ranks) ones += r == 1;
  EXPECT_EQ(t.successes, ones);
  ASSERT_TRUE(t.bound);
  EXPECT_EQ(*t.bound, make_rational(1, 6));
}

TEST(Games, ExhaustiveScannerWinsWithEnoughQueries) {
  const PerturbableFamily f = boxs_family(4);
  ExhaustiveScanner s;
  for (auto* run : {&run_value_game, &run_demand_game}) {
    const GameTranscript t = (*run)(s, f, f.x - 1, 100, 4);
    EXPECT_EQ(t.successes, t.trials);
    EXPECT_FALSE(t.bound.has_value() && *t.bound < 1);
  }
}

TEST(Games, SuccessRatesRespectBoundOnSmallFamily) {
  const PerturbableFamily f = boxs_family(6);
  const std::uint64_t trials = 4000;
  for (auto& alg : builtin_algorithms()) {
    for (auto* run : {&run_value_game, &run_demand_game}) {
      const GameTranscript t = (*run)(*alg, f, 4, trials, 17);
      const double p = theoretical_bound(4, f.x).get_d();
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
      EXPECT_LE(t.success_rate(), p + 3 * sigma) << alg->name();
    }
  }
}

TEST(Games, MakeAlgorithm) {
  EXPECT_EQ(make_algorithm("exhaustive-scanner")->name(), "exhaustive-scanner");
  EXPECT_THROW(make_algorithm("oracle-cheater"), InvalidArgument);
  EXPECT_EQ(builtin_algorithms().size(), 3u);
}

}  // namespace
}  // namespace mdd
