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

#include <random>

#include "fixtures.hpp"
#include "mdd/instances.hpp"
#include "mdd/reduction.hpp"
#include "mdd/transforms.hpp"

namespace mdd {
namespace {

using testing::extensionally_equal;

TEST(Scale, Examples) {
  const Valuation a = Valuation::additive({3, 5});
  EXPECT_TRUE(extensionally_equal(scale(a, 1), a));
  EXPECT_TRUE(extensionally_equal(scale(a, 2), Valuation::additive({6, 10})));
  EXPECT_EQ(value(scale(boxs_family(4).base, 3), ItemSet::full(4)), 6);
  EXPECT_THROW(scale(a, 0), InvalidArgument);
}

TEST(DisjointUnion, Examples) {
  const Valuation z = disjoint_union(Valuation::additive({2}), Valuation::additive({7}));
  EXPECT_EQ(value(z, ItemSet::full(2)), 9);
  EXPECT_EQ(value(z, ItemSet(2, {1})), 7);
}

TEST(DisjointUnion, EqualsDirectSumMatroid) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m1 = 1 + rng() % 4, m2 = 1 + rng() % 4;
    const WeightedMatroid a = testing::random_weighted_matroid(m1, rng);
    const WeightedMatroid b = testing::random_weighted_matroid(m2, rng);
    const auto ia = independent_sets(a.matroid), ib = independent_sets(b.matroid);
    std::vector<Mask> sum;
    for (Mask x : ia) {
      for (Mask y : ib) sum.push_back(x | (y << m1));
    }
    std::vector<Value> w = a.weights;
    w.insert(w.end(), b.weights.begin(), b.weights.end());
    const Valuation direct =
        Valuation::matroid_based(WeightedMatroid(Matroid::explicit_from_masks(m1 + m2, sum), w));
    EXPECT_TRUE(extensionally_equal(
        disjoint_union(Valuation::matroid_based(a), Valuation::matroid_based(b)), direct));
  }
}

TEST(ItemTruncate, UnconstrainedIsIdentity) {
  const Valuation v = appendix_counterexample();
  EXPECT_TRUE(extensionally_equal(item_truncate(v, 4), v));
  EXPECT_TRUE(extensionally_equal(item_truncate(v, 9), v));
  EXPECT_TRUE(extensionally_equal(item_truncate(v, 0), testing::constant_zero(4)));
}

TEST(ItemTruncate, EqualsTruncatedMatroidValuation) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const WeightedMatroid wm = testing::random_weighted_matroid(m, rng);
    for (std::size_t y = 0; y <= m; ++y) {
      const Valuation expect =
          Valuation::matroid_based(WeightedMatroid(Matroid::truncated(y, wm.matroid), wm.weights));
      EXPECT_TRUE(extensionally_equal(item_truncate(Valuation::matroid_based(wm), y), expect));
    }
  }
}

TEST(ValueTruncate, Examples) {
  const Valuation v = Valuation::additive({3, 5});
  EXPECT_TRUE(extensionally_equal(value_truncate(v, 8), v));
  EXPECT_TRUE(extensionally_equal(value_truncate(v, 0), testing::constant_zero(2)));
  EXPECT_EQ(value(value_truncate(v, 4), ItemSet::full(2)), 4);
  EXPECT_THROW(value_truncate(v, -1), InvalidArgument);
}

TEST(ScaledDisjointUnion, CopyLayout) {
  const Valuation v = Valuation::additive({1, 2}), w = Valuation::additive({3, 4});
  const auto out = scaled_disjoint_union(v, w, 3);
  ASSERT_EQ(out.size(), 3u);
  for (const auto& x : out) EXPECT_EQ(x.ground_size(), 4u);
  const ItemSet full = ItemSet::full(4);
  EXPECT_EQ(value(out[0], full), 4 * 3 + 5 * 3);
  EXPECT_EQ(value(out[1], full), 4 * 7 + 5 * 3);
  EXPECT_EQ(value(out[2], full), 4 * 7 + 5 * 7);
  EXPECT_THROW(scaled_disjoint_union(v, w, 1), InvalidArgument);
  EXPECT_THROW(scaled_disjoint_union(v, Valuation::additive({1}), 3), InvalidArgument);
}

TEST(FastTruncatedValue, InactiveTruncationAndEmptySet) {
  const Valuation v = Valuation::matroid_based(WeightedMatroid(Matroid::uniform(2, 1), {2, 1}));
  const SADPInstance inst = build_IT(v, v, 3);
  const auto untruncated = scaled_disjoint_union(v, v, 3);
  for (std::size_t l = 1; l <= 3; ++l) {
    EXPECT_EQ(fast_truncated_value(inst.at(l), ItemSet(4)).value, 0);
    for (Mask s = 0; s < 16; ++s) {
      if (std::popcount(s) > 2) continue;
      EXPECT_EQ(fast_truncated_value(inst.at(l), ItemSet::from_mask(4, s)).value,
                value(untruncated[l - 1], s));
    }
  }
}

TEST(FastTruncatedValue, MatchesBruteForceOnUniformPair) {
  const Valuation v = Valuation::matroid_based(WeightedMatroid(Matroid::uniform(2, 1), {2, 1}));
  const SADPInstance inst = build_IT(v, v, 3);
  const auto untruncated = scaled_disjoint_union(v, v, 3);
  for (std::size_t l = 1; l <= 3; ++l) {
    Value brute = 0;
    for (Mask t = 0; t < 16; ++t) {
      if (std::popcount(t) <= 2) brute = std::max(brute, value(untruncated[l - 1], t));
    }
    const TruncatedValue fast = fast_truncated_value(inst.at(l), ItemSet::full(4));
    EXPECT_EQ(fast.value, brute);
    EXPECT_GT(fast.base_queries, 0u);
    EXPECT_LE(fast.base_queries, 8u);
  }
}

TEST(FastTruncatedValue, MatchesExhaustiveOnRandomPairs) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 10; ++t) {
    const std::size_t m = 1 + rng() % 3;
    const Valuation v = Valuation::matroid_based(testing::random_weighted_matroid(m, rng));
    const Valuation w = Valuation::matroid_based(testing::random_weighted_matroid(m, rng));
    const SADPInstance inst = build_IT(v, w, 3);
    const auto untruncated = scaled_disjoint_union(v, w, 3);
    for (std::size_t l = 1; l <= 3; ++l) {
      for (Mask s = 0; s < (Mask{1} << inst.ground_size()); ++s) {
        const ItemSet set = ItemSet::from_mask(inst.ground_size(), s);
        EXPECT_EQ(fast_truncated_value(inst.at(l), set).value,
                  exhaustive_truncated_value(untruncated[l - 1], m, set));
      }
    }
  }
}

TEST(FastTruncatedValue, RejectsOtherShapes) {
  EXPECT_THROW(fast_truncated_value(Valuation::additive({1}), ItemSet(1)), InvalidArgument);
  const Valuation oxs = boxs_family(2).base;
  EXPECT_FALSE(is_matroid_structured(oxs));
  EXPECT_THROW(fast_truncated_value(item_truncate(oxs, 1), ItemSet(2)), InvalidArgument);
  EXPECT_TRUE(is_matroid_structured(scale(Valuation::additive({1}), 2)));
}

TEST(ItemTruncate, OxsFallbackIsExact) {
  const Valuation v = Valuation::oxs(3, 2, {2, 1, 1, 2, 1, 1});
  const Valuation t = item_truncate(v, 1);
  for (Mask s = 0; s < 8; ++s) {
    Value best = 0;
    for (Item i = 0; i < 3; ++i) {
      if ((s >> i) & 1U) best = std::max(best, value(v, ItemSet(3, {i})));
    }
    EXPECT_EQ(value(t, s), best);
  }
}

}  // namespace
}  // namespace mdd
