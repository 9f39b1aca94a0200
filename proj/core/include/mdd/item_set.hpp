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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mdd {

using Item = std::uint32_t;
/// Bit i set <=> item i present. Only valid for grounds of at most 64 items.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskGround = 64;

/// A subset of the ground set [0, ground_size), kept as a strictly
/// increasing member list.
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(std::size_t ground_size) : ground_size_(ground_size) {}
  /// Members may arrive in any order; duplicates and out-of-range items throw.
  ItemSet(std::size_t ground_size, std::vector<Item> members);
  ItemSet(std::size_t ground_size, std::initializer_list<Item> members)
      : ItemSet(ground_size, std::vector<Item>(members)) {}

  static ItemSet full(std::size_t ground_size);
  static ItemSet from_mask(std::size_t ground_size, Mask mask);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Item i) const;
  const std::vector<Item>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  Mask mask() const;
  ItemSet with(Item i) const;
  ItemSet without(Item i) const;

  /// Lexicographic on the member lists; ties broken by ground size.
  friend std::strong_ordering operator<=>(const ItemSet& a, const ItemSet& b);
  friend bool operator==(const ItemSet& a, const ItemSet& b) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<Item> members_;
};

ItemSet set_union(const ItemSet& a, const ItemSet& b);
ItemSet set_intersection(const ItemSet& a, const ItemSet& b);
ItemSet set_difference(const ItemSet& a, const ItemSet& b);
bool is_subset(const ItemSet& a, const ItemSet& b);

/// Items of `s` inside [offset, offset + length), re-indexed to [0, length).
ItemSet slice(const ItemSet& s, std::size_t offset, std::size_t length);
/// Shifts `s` by `offset` into a ground of `ground_size` items.
ItemSet embed(const ItemSet& s, std::size_t offset, std::size_t ground_size);

/// "{0,2,3}".
std::string to_string(const ItemSet& s);

/// True iff the member list of `a` precedes that of `b` lexicographically.
bool lex_less(Mask a, Mask b);

/// Visits every subset of [0, m) in increasing mask order after checking
/// m against `cap`.
void for_each_subset(std::size_t m, std::size_t cap, const std::function<void(Mask)>& fn);

/// All masks over [0, m) sorted lexicographically by member list.
std::vector<Mask> lexicographic_masks(std::size_t m, std::size_t cap);

}  // namespace mdd
