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

#include "mdd/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mdd {

Matroid Matroid::explicit_independent(std::size_t ground_size, const std::vector<ItemSet>& sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    if (s.ground_size() != ground_size) throw InvalidArgument("independent set over wrong ground");
    masks.push_back(s.mask());
  }
  return explicit_from_masks(ground_size, std::move(masks));
}

Matroid Matroid::explicit_from_masks(std::size_t ground_size, std::vector<Mask> masks) {
  if (ground_size > kMaxMaskGround) throw InvalidArgument("explicit matroid ground too large");
  for (Mask s : masks) {
    if (ground_size < kMaxMaskGround && (s >> ground_size) != 0) {
      throw InvalidArgument("independent set outside ground");
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return Matroid(ground_size, matroid_kind::Explicit{
                                  std::make_shared<const std::vector<Mask>>(std::move(masks))});
}

Matroid Matroid::uniform(std::size_t ground_size, std::size_t rank) {
  return Matroid(ground_size, matroid_kind::Uniform{rank});
}

Matroid Matroid::partition(std::size_t ground_size, std::vector<std::vector<Item>> blocks,
                           std::vector<std::size_t> caps) {
  if (blocks.size() != caps.size()) throw InvalidArgument("partition: one cap per block required");
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(ground_size, kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Item i : blocks[b]) {
      if (i >= ground_size) throw InvalidArgument("partition block item outside ground");
      if (block_of[i] != kUnassigned) throw InvalidArgument("partition blocks overlap");
      block_of[i] = b;
    }
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  if (std::find(block_of.begin(), block_of.end(), kUnassigned) != block_of.end()) {
    throw InvalidArgument("partition blocks do not cover the ground");
  }
  return Matroid(ground_size,
                 matroid_kind::Partition{std::move(blocks), std::move(caps), std::move(block_of)});
}

Matroid Matroid::truncated(std::size_t y, Matroid inner) {
  const std::size_t m = inner.ground_size();
  return Matroid(m, matroid_kind::Truncated{y, std::make_shared<const Matroid>(std::move(inner))});
}

WeightedMatroid::WeightedMatroid(Matroid m, std::vector<Value> w)
    : matroid(std::move(m)), weights(std::move(w)) {
  if (weights.size() != matroid.ground_size()) {
    throw InvalidArgument("weighted matroid: one weight per element required");
  }
  for (Value x : weights) {
    if (x < 0) throw InvalidArgument("weighted matroid: negative weight");
  }
}

namespace {

struct IndependenceTest {
  const ItemSet* set;

  bool operator()(const matroid_kind::Explicit& e) const {
    return std::binary_search(e.independent->begin(), e.independent->end(), set->mask());
  }
  bool operator()(const matroid_kind::Uniform& u) const { return set->size() <= u.rank; }
  bool operator()(const matroid_kind::Partition& p) const {
    std::vector<std::size_t> used(p.blocks.size(), 0);
    for (Item i : *set) {
      if (++used[p.block_of[i]] > p.caps[p.block_of[i]]) return false;
    }
    return true;
  }
  bool operator()(const matroid_kind::Truncated& t) const {
    return set->size() <= t.y && is_independent(*t.inner, *set);
  }
};

}  // namespace

bool is_independent(const Matroid& m, const ItemSet& s) {
  if (s.ground_size() != m.ground_size()) throw InvalidArgument("set over wrong ground");
  return std::visit(IndependenceTest{&s}, m.kind());
}

bool is_independent(const Matroid& m, Mask s) {
  return is_independent(m, ItemSet::from_mask(m.ground_size(), s));
}

std::vector<Mask> independent_sets(const Matroid& m, std::size_t cap) {
  if (const auto* e = std::get_if<matroid_kind::Explicit>(&m.kind())) return *e->independent;
  std::vector<Mask> out;
  for_each_subset(m.ground_size(), cap, [&](Mask s) {
    if (is_independent(m, s)) out.push_back(s);
  });
  return out;
}

AxiomReport verify_axioms(const Matroid& m, std::size_t cap) {
  const std::size_t n = m.ground_size();
  require_within_cap("matroid axiom check", n, cap);
  const std::vector<Mask> indep = independent_sets(m, cap);
  auto member = [&](Mask s) { return std::binary_search(indep.begin(), indep.end(), s); };

  AxiomReport report;
  if (!member(0)) {
    report.ok = false;
    report.failure = AxiomFailure::kEmptyNotIndependent;
    report.first = ItemSet(n);
    report.second = ItemSet(n);
    return report;
  }

  for (Mask s : indep) {
    // Dropping the highest member first visits subsets in lexicographic order.
    for (int bit = 63; bit >= 0; --bit) {
      const Mask b = Mask{1} << bit;
      if ((s & b) != 0 && !member(s & ~b)) {
        report.ok = false;
        report.failure = AxiomFailure::kDownwardClosure;
        report.first = ItemSet::from_mask(n, s);
        report.second = ItemSet::from_mask(n, s & ~b);
        return report;
      }
    }
  }

  // With downward closure established, augmentation between sizes r and
  // r+1 implies it for all size gaps.
  for (Mask small : indep) {
    for (Mask large : indep) {
      if (std::popcount(large) != std::popcount(small) + 1) continue;
      Mask candidates = large & ~small;
      bool extended = false;
      while (candidates != 0 && !extended) {
        const Mask e = candidates & (~candidates + 1);
        extended = member(small | e);
        candidates &= candidates - 1;
      }
      if (!extended) {
        report.ok = false;
        report.failure = AxiomFailure::kAugmentation;
        report.first = ItemSet::from_mask(n, small);
        report.second = ItemSet::from_mask(n, large);
        return report;
      }
    }
  }
  return report;
}

GreedyResult greedy_max_weight(const WeightedMatroid& wm, const ItemSet& s) {
  if (s.ground_size() != wm.matroid.ground_size()) throw InvalidArgument("set over wrong ground");
  std::vector<Item> order(s.begin(), s.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](Item a, Item b) { return wm.weights[a] > wm.weights[b]; });
  GreedyResult out{ItemSet(s.ground_size()), 0};
  for (Item e : order) {
    ItemSet candidate = out.subset.with(e);
    if (is_independent(wm.matroid, candidate)) {
      out.subset = std::move(candidate);
      out.weight = checked_add(out.weight, wm.weights[e]);
    }
  }
  return out;
}

std::size_t rank(const Matroid& m, const ItemSet& s) {
  const WeightedMatroid unit(m, std::vector<Value>(m.ground_size(), 1));
  return static_cast<std::size_t>(greedy_max_weight(unit, s).weight);
}

}  // namespace mdd
