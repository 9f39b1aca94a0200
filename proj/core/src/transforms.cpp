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

#include "mdd/transforms.hpp"

#include <algorithm>
#include <bit>

namespace mdd {

namespace vk = valuation_kind;

Valuation scale(const Valuation& v, Value c) { return Valuation::scaled(c, v); }

Valuation disjoint_union(const Valuation& v, const Valuation& w) {
  return Valuation::disjoint_union({v, w});
}

Valuation item_truncate(const Valuation& v, std::size_t y, std::size_t cap) {
  return Valuation::item_truncated(y, v, cap);
}

Valuation value_truncate(const Valuation& v, Value x) { return Valuation::value_truncated(x, v); }

std::vector<Valuation> scaled_disjoint_union(const ScaledDisjointUnionSpec& spec) {
  if (spec.k < 2) throw InvalidArgument("scaled disjoint union needs k >= 2");
  if (spec.v.ground_size() != spec.w.ground_size()) {
    throw InvalidArgument("scaled disjoint union: v and w on different grounds");
  }
  std::vector<Valuation> out;
  out.reserve(spec.k);
  for (std::size_t l = 1; l <= spec.k; ++l) {
    std::vector<Valuation> parts;
    parts.reserve(spec.k - 1);
    for (std::size_t i = 1; i < spec.k; ++i) {
      parts.push_back(Valuation::scaled(copy_coefficient(spec.k, i), i >= l ? spec.v : spec.w));
    }
    out.push_back(Valuation::disjoint_union(std::move(parts)));
  }
  return out;
}

std::vector<Valuation> scaled_disjoint_union(const Valuation& v, const Valuation& w,
                                             std::size_t k) {
  return scaled_disjoint_union(ScaledDisjointUnionSpec{v, w, k});
}

namespace {

struct MatroidShape {
  bool operator()(const vk::MatroidBased&) const { return true; }
  bool operator()(const vk::Additive&) const { return true; }
  bool operator()(const vk::CDemand&) const { return true; }
  bool operator()(const vk::Scaled& s) const { return is_matroid_structured(*s.inner); }
  bool operator()(const vk::DisjointUnion& d) const {
    return std::all_of(d.parts.begin(), d.parts.end(),
                       [](const Valuation& p) { return is_matroid_structured(p); });
  }
  bool operator()(const vk::ItemTruncated& t) const { return is_matroid_structured(*t.inner); }
  bool operator()(const vk::Restricted& r) const { return is_matroid_structured(*r.inner); }
  template <typename K>
  bool operator()(const K&) const {
    return false;
  }
};

}  // namespace

bool is_matroid_structured(const Valuation& v) { return std::visit(MatroidShape{}, v.kind()); }

Value greedy_truncated_value(const Valuation& inner, std::size_t y, const ItemSet& s,
                             QueryStats* stats) {
  const std::size_t m = inner.ground_size();
  std::vector<std::pair<Value, Item>> order;
  order.reserve(s.size());
  for (Item e : s) order.emplace_back(value(inner, ItemSet(m, {e}), stats), e);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  ItemSet t(m);
  Value current = 0;
  for (const auto& [single, e] : order) {
    if (t.size() >= y) break;
    ItemSet candidate = t.with(e);
    const Value next = value(inner, candidate, stats);
    if (next - current > 0) {
      t = std::move(candidate);
      current = next;
    }
  }
  return current;
}

Value exhaustive_truncated_value(const Valuation& inner, std::size_t y, const ItemSet& s,
                                 std::size_t cap, QueryStats* stats) {
  if (s.size() <= y) return value(inner, s, stats);
  require_within_cap("item truncation subset", s.size(), cap);
  const std::size_t n = s.size();
  const std::vector<Item>& members = s.members();
  Value best = 0;
  for (Mask sub = 1; sub < (Mask{1} << n); ++sub) {
    if (static_cast<std::size_t>(std::popcount(sub)) > y) continue;
    std::vector<Item> picked;
    for (std::size_t b = 0; b < n; ++b) {
      if ((sub >> b) & 1U) picked.push_back(members[b]);
    }
    best = std::max(best, value(inner, ItemSet(inner.ground_size(), std::move(picked)), stats));
  }
  return best;
}

TruncatedValue fast_truncated_value(const Valuation& truncated, const ItemSet& s) {
  const auto* t = std::get_if<vk::ItemTruncated>(&truncated.kind());
  if (t == nullptr) throw InvalidArgument("fast path requires an item-truncated valuation");
  if (!is_matroid_structured(*t->inner)) {
    throw InvalidArgument("fast path requires matroid-based inner valuations, got " +
                          t->inner->kind_name());
  }
  if (s.ground_size() != truncated.ground_size()) {
    throw InvalidArgument("value query over the wrong ground");
  }
  TruncatedValue out;
  QueryStats stats;
  out.value = greedy_truncated_value(*t->inner, t->y, s, &stats);
  out.base_queries = stats.base_queries;
  return out;
}

}  // namespace mdd
