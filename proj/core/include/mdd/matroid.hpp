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
#include <memory>
#include <variant>
#include <vector>

#include "mdd/item_set.hpp"
#include "mdd/numeric.hpp"

namespace mdd {

class Matroid;

namespace matroid_kind {

/// Independent sets listed explicitly, sorted by mask. The ground truth
/// representation; only grounds of at most 64 items.
struct Explicit {
  std::shared_ptr<const std::vector<Mask>> independent;
};

struct Uniform {
  std::size_t rank;
};

/// Blocks partition the ground; at most caps[b] items from block b.
struct Partition {
  std::vector<std::vector<Item>> blocks;
  std::vector<std::size_t> caps;
  std::vector<std::size_t> block_of;  // item -> block index
};

/// Inner independent sets of cardinality at most y.
struct Truncated {
  std::size_t y;
  std::shared_ptr<const Matroid> inner;
};

}  // namespace matroid_kind

class Matroid {
 public:
  using Kind = std::variant<matroid_kind::Explicit, matroid_kind::Uniform,
                            matroid_kind::Partition, matroid_kind::Truncated>;

  /// Does not check the axioms; call verify_axioms for that.
  static Matroid explicit_independent(std::size_t ground_size, const std::vector<ItemSet>& sets);
  static Matroid explicit_from_masks(std::size_t ground_size, std::vector<Mask> masks);
  static Matroid uniform(std::size_t ground_size, std::size_t rank);
  static Matroid partition(std::size_t ground_size, std::vector<std::vector<Item>> blocks,
                           std::vector<std::size_t> caps);
  static Matroid truncated(std::size_t y, Matroid inner);

  std::size_t ground_size() const { return ground_size_; }
  const Kind& kind() const { return kind_; }

 private:
  Matroid(std::size_t ground_size, Kind kind) : ground_size_(ground_size), kind_(std::move(kind)) {}

  std::size_t ground_size_;
  Kind kind_;
};

struct WeightedMatroid {
  WeightedMatroid(Matroid m, std::vector<Value> w);

  Matroid matroid;
  std::vector<Value> weights;
};

bool is_independent(const Matroid& m, const ItemSet& s);
bool is_independent(const Matroid& m, Mask s);

/// Every independent set, increasing mask order.
std::vector<Mask> independent_sets(const Matroid& m, std::size_t cap = kDefaultEnumCap);

enum class AxiomFailure { kNone, kEmptyNotIndependent, kDownwardClosure, kAugmentation };

struct AxiomReport {
  bool ok = true;
  AxiomFailure failure = AxiomFailure::kNone;
  /// kDownwardClosure: `first` independent, `second` a dependent subset of it.
  /// kAugmentation: |first| < |second|, both independent, and no element of
  /// second \ first extends first.
  ItemSet first;
  ItemSet second;
};

AxiomReport verify_axioms(const Matroid& m, std::size_t cap = kDefaultEnumCap);

struct GreedyResult {
  ItemSet subset;
  Value weight = 0;
};

/// Max-weight independent subset of `s`: descending weight, ties by index.
GreedyResult greedy_max_weight(const WeightedMatroid& wm, const ItemSet& s);

std::size_t rank(const Matroid& m, const ItemSet& s);

}  // namespace mdd
