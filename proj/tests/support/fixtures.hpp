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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdd/instances.hpp"
#include "mdd/matroid.hpp"
#include "mdd/valuation.hpp"

namespace mdd::testing {

inline bool extensionally_equal(const Valuation& a, const Valuation& b) {
  if (a.ground_size() != b.ground_size()) return false;
  return tabulate(a, 20) == tabulate(b, 20);
}

inline Valuation constant_zero(std::size_t m) {
  return Valuation::explicit_table(m, std::vector<Value>(std::size_t{1} << m, 0));
}

/// Brute force over independent subsets of s.
inline Value brute_matroid_value(const Matroid& mat, const std::vector<Value>& w, Mask s) {
  Value best = 0;
  for (Mask t = s;; t = (t - 1) & s) {
    if (is_independent(mat, t)) {
      Value sum = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if ((t >> i) & 1U) sum += w[i];
      }
      best = std::max(best, sum);
    }
    if (t == 0) break;
  }
  return best;
}

/// Graphic matroid of a random multigraph: a set is independent iff its
/// edges form a forest.
inline Matroid random_graphic(std::size_t m, std::mt19937_64& rng) {
  const std::size_t nodes = 2 + rng() % 4;
  std::vector<std::pair<std::size_t, std::size_t>> edges(m);
  for (auto& e : edges) e = {rng() % nodes, rng() % nodes};
  std::vector<Mask> indep;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    std::vector<std::size_t> parent(nodes);
    for (std::size_t i = 0; i < nodes; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    for (std::size_t i = 0; i < m && forest; ++i) {
      if (((s >> i) & 1U) == 0) continue;
      const std::size_t a = find(edges[i].first), b = find(edges[i].second);
      if (a == b) forest = false;
      parent[a] = b;
    }
    if (forest) indep.push_back(s);
  }
  return Matroid::explicit_from_masks(m, std::move(indep));
}

inline Matroid random_matroid(std::size_t m, std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0:
      return Matroid::uniform(m, rng() % (m + 1));
    case 1: {
      const std::size_t blocks = 1 + rng() % m;
      std::vector<std::vector<Item>> parts(blocks);
      for (Item i = 0; i < m; ++i) parts[i < blocks ? i : rng() % blocks].push_back(i);
      std::vector<std::size_t> caps(blocks);
      for (std::size_t b = 0; b < blocks; ++b) caps[b] = rng() % (parts[b].size() + 1);
      return Matroid::partition(m, std::move(parts), std::move(caps));
    }
    default:
      return random_graphic(m, rng);
  }
}

inline std::vector<Value> random_weights(std::size_t m, std::mt19937_64& rng, Value lo = 1,
                                         Value hi = 9) {
  std::vector<Value> w(m);
  for (auto& x : w) x = lo + static_cast<Value>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return w;
}

inline WeightedMatroid random_weighted_matroid(std::size_t m, std::mt19937_64& rng) {
  return WeightedMatroid(random_matroid(m, rng), random_weights(m, rng));
}

struct OdpFixture {
  std::string name;
  Valuation v;
  Valuation w;
};

/// Small matroid-based and OXS pairs, including the binary OXS
/// perturbation pairs.
inline std::vector<OdpFixture> odp_fixtures() {
  std::vector<OdpFixture> out;
  const PerturbableFamily fam = boxs_family(2);
  out.push_back({"boxs2_p0", fam.base, perturb(fam, ItemSet(2, {0}))});
  out.push_back({"boxs2_p1", fam.base, perturb(fam, ItemSet(2, {1}))});
  out.push_back({"boxs2_rev", perturb(fam, ItemSet(2, {0})), fam.base});
  const PerturbableFamily fam4 = boxs_family(4);
  out.push_back({"boxs4_p01", fam4.base, perturb(fam4, ItemSet(4, {0, 1}))});
  out.push_back({"boxs4_p13", fam4.base, perturb(fam4, ItemSet(4, {1, 3}))});
  const auto mb = [](Matroid m, std::vector<Value> w) {
    return Valuation::matroid_based(WeightedMatroid(std::move(m), std::move(w)));
  };
  out.push_back({"uniform1_vs_additive", mb(Matroid::uniform(2, 1), {2, 1}),
                 Valuation::additive({1, 1})});
  out.push_back({"additive_swap", Valuation::additive({5, 1}), Valuation::additive({1, 5})});
  out.push_back({"partition3", mb(Matroid::partition(3, {{0, 1}, {2}}, {1, 1}), {4, 3, 2}),
                 mb(Matroid::uniform(3, 1), {1, 2, 3})});
  out.push_back({"uniform3", mb(Matroid::uniform(3, 2), {3, 2, 2}), Valuation::additive({2, 1, 1})});
  out.push_back({"oxs3", Valuation::oxs(3, 2, {2, 1, 1, 2, 1, 1}), Valuation::oxs(3, 1, {1, 1, 2})});
  out.push_back({"identical", Valuation::additive({2, 3, 1}), Valuation::additive({2, 3, 1})});
  out.push_back({"dominated", Valuation::additive({1, 1, 1}), Valuation::additive({2, 2, 2})});
  return out;
}

}  // namespace mdd::testing
