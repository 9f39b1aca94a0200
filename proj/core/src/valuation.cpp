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

#include "mdd/valuation.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "mdd/instances.hpp"
#include "mdd/matching.hpp"
#include "mdd/transforms.hpp"

namespace mdd {

namespace vk = valuation_kind;

bool Cnf::satisfied_by(std::uint64_t assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
      const bool bit = ((assignment >> (var - 1)) & 1U) != 0;
      if ((lit > 0) == bit) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

void require_nonnegative(const std::vector<Value>& weights, const char* what) {
  for (Value w : weights) {
    if (w < 0) throw InvalidArgument(std::string(what) + ": negative weight");
  }
}

std::shared_ptr<const Valuation> share(Valuation v) {
  return std::make_shared<const Valuation>(std::move(v));
}

}  // namespace

Valuation Valuation::explicit_table(std::size_t ground_size, std::vector<Value> values_by_mask) {
  if (ground_size >= kMaxMaskGround) throw InvalidArgument("explicit table ground too large");
  if (values_by_mask.size() != (std::size_t{1} << ground_size)) {
    throw InvalidArgument("explicit table: missing entry (expected " +
                          std::to_string(std::size_t{1} << ground_size) + " values, got " +
                          std::to_string(values_by_mask.size()) + ")");
  }
  require_nonnegative(values_by_mask, "explicit table");
  return Valuation(ground_size, vk::ExplicitTable{std::make_shared<const std::vector<Value>>(
                                    std::move(values_by_mask))});
}

Valuation Valuation::additive(std::vector<Value> weights) {
  require_nonnegative(weights, "additive");
  const std::size_t m = weights.size();
  return Valuation(m, vk::Additive{std::move(weights)});
}

Valuation Valuation::c_demand(std::size_t capacity, std::vector<Value> weights) {
  require_nonnegative(weights, "c-demand");
  const std::size_t m = weights.size();
  return Valuation(m, vk::CDemand{capacity, std::move(weights)});
}

Valuation Valuation::oxs(std::size_t ground_size, std::size_t right_size,
                         std::vector<Value> weights) {
  if (weights.size() != ground_size * right_size) {
    throw InvalidArgument("oxs: weight grid must be ground_size x right_size");
  }
  require_nonnegative(weights, "oxs");
  return Valuation(ground_size, vk::Oxs{right_size, std::move(weights)});
}

Valuation Valuation::matroid_based(WeightedMatroid wm) {
  const std::size_t m = wm.matroid.ground_size();
  return Valuation(m, vk::MatroidBased{std::make_shared<const WeightedMatroid>(std::move(wm))});
}

Valuation Valuation::sat_perturbed(Valuation base, Cnf cnf) {
  const std::size_t m = base.ground_size();
  if (m % 2 != 0) throw InvalidArgument("sat-perturbed: ground size must be even");
  if (cnf.num_vars >= 64 || (std::uint64_t{1} << cnf.num_vars) > binomial(m, m / 2)) {
    throw InvalidArgument("sat-perturbed: " + std::to_string(cnf.num_vars) +
                          " variables need more than C(m, m/2) perturbing sets");
  }
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) {
      const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
      if (lit == 0 || var > cnf.num_vars) throw InvalidArgument("sat-perturbed: bad literal");
    }
  }
  return Valuation(m, vk::SatPerturbed{share(std::move(base)), std::move(cnf)});
}

Valuation Valuation::perturbed(Valuation base, ItemSet at) {
  const std::size_t m = base.ground_size();
  if (at.ground_size() != m) throw InvalidArgument("perturbed: set over wrong ground");
  return Valuation(m, vk::Perturbed{share(std::move(base)), std::move(at)});
}

Valuation Valuation::scaled(Value factor, Valuation inner) {
  if (factor < 1) throw InvalidArgument("scale factor must be a positive integer");
  const std::size_t m = inner.ground_size();
  return Valuation(m, vk::Scaled{factor, share(std::move(inner))});
}

Valuation Valuation::disjoint_union(std::vector<Valuation> parts) {
  std::vector<std::size_t> offsets;
  offsets.reserve(parts.size());
  std::size_t m = 0;
  for (const auto& p : parts) {
    offsets.push_back(m);
    m += p.ground_size();
  }
  return Valuation(m, vk::DisjointUnion{std::move(parts), std::move(offsets)});
}

Valuation Valuation::item_truncated(std::size_t y, Valuation inner, std::size_t cap) {
  const std::size_t m = inner.ground_size();
  return Valuation(m, vk::ItemTruncated{y, share(std::move(inner)), cap});
}

Valuation Valuation::value_truncated(Value x, Valuation inner) {
  if (x < 0) throw InvalidArgument("value truncation level must be non-negative");
  const std::size_t m = inner.ground_size();
  return Valuation(m, vk::ValueTruncated{x, share(std::move(inner))});
}

Valuation Valuation::restricted(Valuation inner, std::vector<Item> kept) {
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw InvalidArgument("restriction keeps an item twice");
  }
  if (!kept.empty() && kept.back() >= inner.ground_size()) {
    throw InvalidArgument("restriction keeps an item outside the ground");
  }
  const std::size_t m = kept.size();
  return Valuation(m, vk::Restricted{share(std::move(inner)), std::move(kept)});
}

std::string Valuation::kind_name() const {
  struct Namer {
    std::string operator()(const vk::ExplicitTable&) const { return "explicit_table"; }
    std::string operator()(const vk::Additive&) const { return "additive"; }
    std::string operator()(const vk::CDemand&) const { return "c_demand"; }
    std::string operator()(const vk::Oxs&) const { return "oxs"; }
    std::string operator()(const vk::MatroidBased&) const { return "matroid_based"; }
    std::string operator()(const vk::SatPerturbed&) const { return "sat_perturbed"; }
    std::string operator()(const vk::Perturbed&) const { return "perturbed"; }
    std::string operator()(const vk::Scaled&) const { return "scaled"; }
    std::string operator()(const vk::DisjointUnion&) const { return "disjoint_union"; }
    std::string operator()(const vk::ItemTruncated&) const { return "item_truncated"; }
    std::string operator()(const vk::ValueTruncated&) const { return "value_truncated"; }
    std::string operator()(const vk::Restricted&) const { return "restricted"; }
  };
  return std::visit(Namer{}, kind());
}

namespace {

struct Evaluator {
  const ItemSet& s;
  QueryStats* stats;

  void count() const {
    if (stats != nullptr && !s.empty()) ++stats->base_queries;
  }

  Value operator()(const vk::ExplicitTable& t) const {
    count();
    return (*t.values)[s.mask()];
  }

  Value operator()(const vk::Additive& a) const {
    count();
    Value total = 0;
    for (Item i : s) total = checked_add(total, a.weights[i]);
    return total;
  }

  Value operator()(const vk::CDemand& c) const {
    count();
    std::vector<Value> w;
    w.reserve(s.size());
    for (Item i : s) w.push_back(c.weights[i]);
    const std::size_t take = std::min(c.capacity, w.size());
    std::partial_sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(take), w.end(),
                      std::greater<>());
    Value total = 0;
    for (std::size_t i = 0; i < take; ++i) total = checked_add(total, w[i]);
    return total;
  }

  Value operator()(const vk::Oxs& o) const {
    count();
    std::vector<Value> rows;
    rows.reserve(s.size() * o.right_size);
    for (Item i : s) {
      const auto first = o.weights.begin() + static_cast<std::ptrdiff_t>(i * o.right_size);
      rows.insert(rows.end(), first, first + static_cast<std::ptrdiff_t>(o.right_size));
    }
    return detail::max_weight_matching_value(rows, s.size(), o.right_size);
  }

  Value operator()(const vk::MatroidBased& mb) const {
    count();
    return greedy_max_weight(*mb.weighted, s).weight;
  }

  Value operator()(const vk::SatPerturbed& sp) const {
    count();
    const std::size_t m = s.ground_size();
    const Value base = value(*sp.base, s);
    if (s.size() != m / 2) return base;
    const std::uint64_t r = subset_rank(m, s);
    if (r > (std::uint64_t{1} << sp.cnf.num_vars)) return base;
    return sp.cnf.satisfied_by(r - 1) ? base - 1 : base;
  }

  Value operator()(const vk::Perturbed& p) const {
    count();
    const Value base = value(*p.base, s);
    return s == p.at ? base - 1 : base;
  }

  Value operator()(const vk::Scaled& sc) const {
    return checked_mul(sc.factor, value(*sc.inner, s, stats));
  }

  Value operator()(const vk::DisjointUnion& du) const {
    Value total = 0;
    for (std::size_t i = 0; i < du.parts.size(); ++i) {
      const ItemSet part = slice(s, du.offsets[i], du.parts[i].ground_size());
      if (part.empty()) continue;  // normalized
      total = checked_add(total, value(du.parts[i], part, stats));
    }
    return total;
  }

  Value operator()(const vk::ItemTruncated& t) const {
    if (is_matroid_structured(*t.inner)) return greedy_truncated_value(*t.inner, t.y, s, stats);
    return exhaustive_truncated_value(*t.inner, t.y, s, t.cap, stats);
  }

  Value operator()(const vk::ValueTruncated& t) const {
    return std::min(value(*t.inner, s, stats), t.x);
  }

  Value operator()(const vk::Restricted& r) const {
    std::vector<Item> mapped;
    mapped.reserve(s.size());
    for (Item i : s) mapped.push_back(r.kept[i]);
    return value(*r.inner, ItemSet(r.inner->ground_size(), std::move(mapped)), stats);
  }
};

}  // namespace

Value value(const Valuation& v, const ItemSet& s, QueryStats* stats) {
  if (s.ground_size() != v.ground_size()) {
    throw InvalidArgument("value query over " + std::to_string(s.ground_size()) +
                          " items for a valuation on " + std::to_string(v.ground_size()));
  }
  return std::visit(Evaluator{s, stats}, v.kind());
}

Value value(const Valuation& v, Mask s) {
  return value(v, ItemSet::from_mask(v.ground_size(), s));
}

std::vector<Value> tabulate(const Valuation& v, std::size_t cap) {
  std::vector<Value> out;
  const std::size_t m = v.ground_size();
  for_each_subset(m, cap, [&](Mask s) { out.push_back(value(v, s)); });
  return out;
}

DemandSolver::DemandSolver(std::size_t ground_size, std::size_t cap)
    : ground_size_(ground_size), lex_order_(lexicographic_masks(ground_size, cap)) {}

ItemSet DemandSolver::solve(std::span<const Value> values_by_mask,
                            std::span<const Rational> prices) const {
  if (prices.size() != ground_size_) {
    throw InvalidArgument("demand: " + std::to_string(prices.size()) + " prices for " +
                          std::to_string(ground_size_) + " items");
  }
  for (const auto& p : prices) {
    if (p < 0) throw InvalidArgument("demand: negative price");
  }
  if (auto fast = solve_scaled(values_by_mask, prices)) return ItemSet::from_mask(ground_size_, *fast);
  std::vector<Rational> cost(values_by_mask.size());
  for (Mask s = 1; s < values_by_mask.size(); ++s) {
    cost[s] = cost[s & (s - 1)] + prices[static_cast<std::size_t>(std::countr_zero(s))];
  }
  Mask best = lex_order_.front();
  Rational best_surplus = values_by_mask[best] - cost[best];
  Rational cur;
  for (Mask s : lex_order_) {
    cur = values_by_mask[s];
    cur -= cost[s];
    if (cur > best_surplus) {
      best_surplus = cur;
      best = s;
    }
  }
  return ItemSet::from_mask(ground_size_, best);
}

std::optional<Mask> DemandSolver::solve_scaled(std::span<const Value> values_by_mask,
                                               std::span<const Rational> prices) const {
  constexpr long kLimit = 1L << 40;
  BigInt lcm = 1;
  for (const auto& p : prices) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get_den_mpz_t());
    if (lcm > kLimit) return std::nullopt;
  }
  const Value scale = lcm.get_si();
  std::vector<Value> cost(values_by_mask.size(), 0);
  std::vector<Value> scaled(ground_size_);
  for (std::size_t i = 0; i < ground_size_; ++i) {
    const BigInt p = prices[i].get_num() * (lcm / prices[i].get_den());
    if (p > kLimit) return std::nullopt;
    scaled[i] = p.get_si();
  }
  for (Mask s = 1; s < values_by_mask.size(); ++s) {
    cost[s] = cost[s & (s - 1)] + scaled[static_cast<std::size_t>(std::countr_zero(s))];
  }
  for (Value v : values_by_mask) {
    if (v > (Value{1} << 61) / scale || v < -((Value{1} << 61) / scale)) return std::nullopt;
  }
  Mask best = lex_order_.front();
  Value best_surplus = values_by_mask[best] * scale - cost[best];
  for (Mask s : lex_order_) {
    const Value cur = values_by_mask[s] * scale - cost[s];
    if (cur > best_surplus) {
      best_surplus = cur;
      best = s;
    }
  }
  return best;
}

ItemSet demand(const Valuation& v, std::span<const Rational> prices, std::size_t cap) {
  if (prices.size() != v.ground_size()) {
    throw InvalidArgument("demand: " + std::to_string(prices.size()) + " prices for " +
                          std::to_string(v.ground_size()) + " items");
  }
  const DemandSolver solver(v.ground_size(), cap);
  const auto table = tabulate(v, cap);
  return solver.solve(table, prices);
}

ItemSet matroid_demand_greedy(const WeightedMatroid& wm, std::span<const Rational> prices) {
  const std::size_t m = wm.matroid.ground_size();
  if (prices.size() != m) throw InvalidArgument("demand: price vector length mismatch");
  std::vector<Rational> gain(m);
  std::vector<Item> order(m);
  for (Item i = 0; i < m; ++i) {
    gain[i] = Rational(wm.weights[i]) - prices[i];
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](Item a, Item b) { return gain[a] > gain[b]; });
  ItemSet out(m);
  for (Item e : order) {
    if (gain[e] <= 0) break;
    ItemSet candidate = out.with(e);
    if (is_independent(wm.matroid, candidate)) out = std::move(candidate);
  }
  return out;
}

Rational surplus(const Valuation& v, const ItemSet& t, std::span<const Rational> prices) {
  if (prices.size() != v.ground_size()) throw InvalidArgument("price vector length mismatch");
  Rational out(value(v, t));
  for (Item i : t) out -= prices[i];
  return out;
}

ItemSet PreprocessedPair::lift(const ItemSet& reduced_solution) const {
  if (reduced_solution.ground_size() != kept.size()) {
    throw InvalidArgument("solution is not over the reduced ground");
  }
  std::vector<Item> out;
  for (Item i : reduced_solution) out.push_back(kept[i]);
  for (Item i : removed_for_w) {
    if (!removed_for_v.contains(i)) out.push_back(i);
  }
  return ItemSet(original_ground, std::move(out));
}

PreprocessedPair preprocess_trivial_items(const Valuation& v, const Valuation& w) {
  const std::size_t m = v.ground_size();
  if (w.ground_size() != m) throw InvalidArgument("preprocess: valuations on different grounds");
  std::vector<Item> trivial_v, trivial_w, kept;
  for (Item i = 0; i < m; ++i) {
    const ItemSet single(m, {i});
    const bool tv = value(v, single) == 0;
    const bool tw = value(w, single) == 0;
    if (tv) trivial_v.push_back(i);
    if (tw) trivial_w.push_back(i);
    if (!tv && !tw) kept.push_back(i);
  }
  PreprocessedPair out{v, w, ItemSet(m, trivial_v), ItemSet(m, trivial_w), kept, m};
  if (kept.size() != m) {
    out.v = Valuation::restricted(v, kept);
    out.w = Valuation::restricted(w, kept);
  }
  return out;
}

TypeDistribution::TypeDistribution(std::vector<TypeEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("distribution has no support");
  ground_size_ = entries_.front().valuation.ground_size();
  Rational total;
  for (const auto& e : entries_) {
    if (e.valuation.ground_size() != ground_size_) {
      throw InvalidArgument("distribution valuations have different ground sizes");
    }
    if (e.probability <= 0) throw InvalidArgument("distribution probability must be positive");
    total += e.probability;
  }
  if (total != 1) throw InvalidArgument("probabilities sum to " + to_string(total));
}

}  // namespace mdd
