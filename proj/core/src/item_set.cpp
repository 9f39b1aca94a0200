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

#include "mdd/item_set.hpp"

#include <algorithm>
#include <bit>

#include "mdd/numeric.hpp"

namespace mdd {

ItemSet::ItemSet(std::size_t ground_size, std::vector<Item> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("item set has duplicate members");
  }
  if (!members_.empty() && members_.back() >= ground_size_) {
    throw InvalidArgument("item " + std::to_string(members_.back()) + " outside ground of size " +
                          std::to_string(ground_size_));
  }
}

ItemSet ItemSet::full(std::size_t ground_size) {
  ItemSet s(ground_size);
  s.members_.resize(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) s.members_[i] = static_cast<Item>(i);
  return s;
}

ItemSet ItemSet::from_mask(std::size_t ground_size, Mask mask) {
  if (ground_size < kMaxMaskGround && (mask >> ground_size) != 0) {
    throw InvalidArgument("mask has bits outside the ground set");
  }
  ItemSet s(ground_size);
  s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.members_.push_back(static_cast<Item>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

bool ItemSet::contains(Item i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Mask ItemSet::mask() const {
  if (ground_size_ > kMaxMaskGround) {
    throw InvalidArgument("ground of " + std::to_string(ground_size_) + " items has no mask form");
  }
  Mask m = 0;
  for (Item i : members_) m |= Mask{1} << i;
  return m;
}

ItemSet ItemSet::with(Item i) const {
  if (i >= ground_size_) throw InvalidArgument("item outside ground");
  ItemSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), i);
  if (it == out.members_.end() || *it != i) out.members_.insert(it, i);
  return out;
}

ItemSet ItemSet::without(Item i) const {
  ItemSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), i);
  if (it != out.members_.end() && *it == i) out.members_.erase(it);
  return out;
}

std::strong_ordering operator<=>(const ItemSet& a, const ItemSet& b) {
  if (auto c = std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                       b.members_.begin(), b.members_.end());
      c != 0) {
    return c;
  }
  return a.ground_size_ <=> b.ground_size_;
}

namespace {

void require_same_ground(const ItemSet& a, const ItemSet& b) {
  if (a.ground_size() != b.ground_size()) throw InvalidArgument("item sets over different grounds");
}

}  // namespace

ItemSet set_union(const ItemSet& a, const ItemSet& b) {
  require_same_ground(a, b);
  std::vector<Item> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ItemSet(a.ground_size(), std::move(out));
}

ItemSet set_intersection(const ItemSet& a, const ItemSet& b) {
  require_same_ground(a, b);
  std::vector<Item> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ItemSet(a.ground_size(), std::move(out));
}

ItemSet set_difference(const ItemSet& a, const ItemSet& b) {
  require_same_ground(a, b);
  std::vector<Item> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ItemSet(a.ground_size(), std::move(out));
}

bool is_subset(const ItemSet& a, const ItemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ItemSet slice(const ItemSet& s, std::size_t offset, std::size_t length) {
  std::vector<Item> out;
  auto lo = std::lower_bound(s.begin(), s.end(), static_cast<Item>(offset));
  for (auto it = lo; it != s.end() && *it < offset + length; ++it) {
    out.push_back(static_cast<Item>(*it - offset));
  }
  return ItemSet(length, std::move(out));
}

ItemSet embed(const ItemSet& s, std::size_t offset, std::size_t ground_size) {
  if (offset + s.ground_size() > ground_size) throw InvalidArgument("embedding outside ground");
  std::vector<Item> out;
  out.reserve(s.size());
  for (Item i : s) out.push_back(static_cast<Item>(i + offset));
  return ItemSet(ground_size, std::move(out));
}

std::string to_string(const ItemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const int d = std::countr_zero(diff);
  // The lists agree below d. The one holding d is smaller unless the other
  // runs out of members there (a proper prefix sorts first).
  const bool a_has = ((a >> d) & 1U) != 0;
  const Mask other = a_has ? b : a;
  const bool other_continues = d + 1 < 64 && (other >> (d + 1)) != 0;
  return a_has ? other_continues : !other_continues;
}

void for_each_subset(std::size_t m, std::size_t cap, const std::function<void(Mask)>& fn) {
  require_within_cap("subset enumeration", m, std::min<std::size_t>(cap, kMaxMaskGround - 1));
  const Mask end = Mask{1} << m;
  for (Mask s = 0; s < end; ++s) fn(s);
}

std::vector<Mask> lexicographic_masks(std::size_t m, std::size_t cap) {
  std::vector<Mask> out;
  for_each_subset(m, cap, [&](Mask s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace mdd
