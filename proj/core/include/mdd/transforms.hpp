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

// Closure operations on valuations. All results are lazy wrappers: values
// are computed on query, so grounds may exceed the explicit-table cap.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mdd/valuation.hpp"

namespace mdd {

/// c * v. Requires c >= 1.
Valuation scale(const Valuation& v, Value c);

/// z(S) = v(S ∩ first block) + w(S ∩ second block) on m_v + m_w items.
Valuation disjoint_union(const Valuation& v, const Valuation& w);

/// max_{T ⊆ S, |T| <= y} v(T).
Valuation item_truncate(const Valuation& v, std::size_t y, std::size_t cap = kDefaultEnumCap);

/// min(v(S), x).
Valuation value_truncate(const Valuation& v, Value x);

struct ScaledDisjointUnionSpec {
  Valuation v;
  Valuation w;
  std::size_t k;
};

/// Coefficient of copy i (1-based) in a k-valuation scaled disjoint union.
inline Value copy_coefficient(std::size_t k, std::size_t i) { return static_cast<Value>(k + i); }

/// k valuations on (k-1)m items. Copy i (1-based) holds items
/// [(i-1)m, im). The l-th output values copy i with (k+i)·v when i >= l and
/// with (k+i)·w when i < l.
std::vector<Valuation> scaled_disjoint_union(const ScaledDisjointUnionSpec& spec);
std::vector<Valuation> scaled_disjoint_union(const Valuation& v, const Valuation& w, std::size_t k);

/// True when the valuation is a weighted-matroid valuation by construction
/// (matroid-based, additive, c-demand, and scalings, disjoint unions,
/// restrictions and item truncations of those).
bool is_matroid_structured(const Valuation& v);

/// Greedy item-truncated value: visit S by decreasing singleton value
/// (ties by index), keep e while |T| < y and v(T+e) - v(T) > 0.
/// Exact for matroid-structured inner valuations only.
Value greedy_truncated_value(const Valuation& inner, std::size_t y, const ItemSet& s,
                             QueryStats* stats = nullptr);

/// Exact item-truncated value by enumerating subsets of S of size <= y.
Value exhaustive_truncated_value(const Valuation& inner, std::size_t y, const ItemSet& s,
                                 std::size_t cap = kDefaultEnumCap, QueryStats* stats = nullptr);

struct TruncatedValue {
  Value value = 0;
  /// Value queries that reached the underlying v or w.
  std::uint64_t base_queries = 0;
};

/// Greedy value of an item-truncated, matroid-structured valuation (such as
/// the outputs of build_IT over matroid-based v, w). Throws InvalidArgument
/// for any other shape.
TruncatedValue fast_truncated_value(const Valuation& truncated, const ItemSet& s);

}  // namespace mdd
