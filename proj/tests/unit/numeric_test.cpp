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

#include "mdd/item_set.hpp"
#include "mdd/numeric.hpp"

namespace mdd {
namespace {

TEST(Numeric, ParsesAndPrintsCanonicalRationals) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(to_string(parse_rational("6/3")), "2");
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(Numeric, CheckedArithmeticDetectsOverflow) {
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_EQ(checked_mul(-4, 3), -12);
  EXPECT_THROW(checked_add(INT64_MAX, 1), ArithmeticOverflow);
  EXPECT_THROW(checked_mul(INT64_MAX / 2, 3), ArithmeticOverflow);
}

TEST(Numeric, CeilOfRationals) {
  EXPECT_EQ(ceil(make_rational(7, 2)), 4);
  EXPECT_EQ(ceil(make_rational(-7, 2)), -3);
  EXPECT_EQ(ceil(make_rational(6, 3)), 2);
}

TEST(Numeric, CapGuard) {
  EXPECT_NO_THROW(require_within_cap("x", 16, 16));
  try {
    require_within_cap("x", 17, 16);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.size(), 17u);
    EXPECT_EQ(e.cap(), 16u);
  }
}

TEST(Numeric, UniformBelowStaysInRangeAndCoversIt) {
  std::mt19937_64 rng(mix_seed(7));
  std::vector<int> hits(5);
  for (int i = 0; i < 5000; ++i) ++hits[uniform_below(rng, 5)];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(uniform_below(rng, 0), InvalidArgument);
}

TEST(Numeric, MixSeedIsDeterministicAndSpreads) {
  EXPECT_EQ(mix_seed(1), mix_seed(1));
  EXPECT_NE(mix_seed(1), mix_seed(2));
}

TEST(ItemSet, NormalizesAndRejects) {
  ItemSet s(5, {3, 1});
  EXPECT_EQ(s.members(), (std::vector<Item>{1, 3}));
  EXPECT_EQ(s.mask(), Mask{0b1010});
  EXPECT_THROW(ItemSet(3, {1, 1}), InvalidArgument);
  EXPECT_THROW(ItemSet(3, {3}), InvalidArgument);
}

TEST(ItemSet, SetAlgebra) {
  const ItemSet a(6, {0, 2, 4}), b(6, {2, 3});
  EXPECT_EQ(set_union(a, b), ItemSet(6, {0, 2, 3, 4}));
  EXPECT_EQ(set_intersection(a, b), ItemSet(6, {2}));
  EXPECT_EQ(set_difference(a, b), ItemSet(6, {0, 4}));
  EXPECT_TRUE(is_subset(ItemSet(6, {2}), b));
  EXPECT_FALSE(is_subset(a, b));
  EXPECT_EQ(slice(a, 2, 3), ItemSet(3, {0, 2}));
  EXPECT_EQ(embed(ItemSet(2, {1}), 4, 6), ItemSet(6, {5}));
  EXPECT_EQ(to_string(a), "{0,2,4}");
  EXPECT_EQ(to_string(ItemSet(3)), "{}");
}

TEST(ItemSet, MaskRoundTrip) {
  for (Mask s = 0; s < 64; ++s) EXPECT_EQ(ItemSet::from_mask(6, s).mask(), s);
}

TEST(ItemSet, LexicographicOrderMatchesMemberLists) {
  const auto order = lexicographic_masks(4, 16);
  ASSERT_EQ(order.size(), 16u);
  EXPECT_EQ(order.front(), Mask{0});
  for (std::size_t i = 1; i < order.size(); ++i) {
    EXPECT_LT(ItemSet::from_mask(4, order[i - 1]).members(),
              ItemSet::from_mask(4, order[i]).members());
    EXPECT_TRUE(lex_less(order[i - 1], order[i]));
  }
}

TEST(ItemSet, SubsetLoopRespectsCap) {
  std::size_t n = 0;
  for_each_subset(3, 16, [&](Mask) { ++n; });
  EXPECT_EQ(n, 8u);
  EXPECT_THROW(for_each_subset(17, 16, [](Mask) {}), CapExceeded);
}

}  // namespace
}  // namespace mdd
