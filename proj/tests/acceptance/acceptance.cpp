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

// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mdd/games.hpp"
#include "mdd/instances.hpp"
#include "mdd/reduction.hpp"
#include "mdd/solvers.hpp"
#include "mdd/transforms.hpp"

namespace {

using namespace mdd;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string first_failure;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) first_failure = why;
    ok = false;
  }
};

Rational ratio(Value num, Value den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// 1. Edge-removal perturbation equals the pointwise one.
void perturbation_equivalence(Outcome& out) {
  std::size_t sets = 0;
  for (std::size_t m : {2u, 4u, 6u, 8u}) {
    const PerturbableFamily f = boxs_family(m);
    for (std::uint64_t r = 1; r <= f.x; ++r) {
      const ItemSet s = subset_unrank(m, m / 2, r);
      if (tabulate(perturb(f, s)) != tabulate(perturb_pointwise(f, s))) {
        out.fail("m=" + std::to_string(m) + " S=" + to_string(s));
      }
      ++sets;
    }
  }
  out.detail << sets << " perturbing sets over m in {2,4,6,8}";
}

// 2. Item truncation of a matroid-based valuation is the truncated matroid's valuation.
void truncated_matroid(Outcome& out) {
  std::mt19937_64 rng(2024);
  std::size_t checks = 0;
  for (int t = 0; t < 25; ++t) {
    const std::size_t m = 1 + t % 8;
    const WeightedMatroid wm = testing::random_weighted_matroid(m, rng);
    for (std::size_t y = 0; y <= m; ++y) {
      const Valuation expect =
          Valuation::matroid_based(WeightedMatroid(Matroid::truncated(y, wm.matroid), wm.weights));
      if (!testing::extensionally_equal(item_truncate(Valuation::matroid_based(wm), y), expect)) {
        out.fail("matroid " + std::to_string(t) + " y=" + std::to_string(y));
      }
      ++checks;
    }
  }
  out.detail << "25 random weighted matroids, " << checks << " (matroid, y) pairs";
}

// 3. Greedy truncated values equal exhaustive ones on small IT instances.
void query_sufficiency(Outcome& out) {
  std::mt19937_64 rng(77);
  std::size_t instances = 0, queries = 0;
  for (int t = 0; t < 12; ++t) {
    const std::size_t m = 1 + t % 5;
    const Valuation v = Valuation::matroid_based(testing::random_weighted_matroid(m, rng));
    const Valuation w = Valuation::matroid_based(testing::random_weighted_matroid(m, rng));
    for (std::size_t k = 2; (k - 1) * m <= 10; ++k) {
      const SADPInstance inst = build_IT(v, w, k);
      const auto untruncated = scaled_disjoint_union(v, w, k);
      const std::size_t n = inst.ground_size();
      for (std::size_t l = 1; l <= k; ++l) {
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
          const ItemSet set = ItemSet::from_mask(n, s);
          const Value fast = fast_truncated_value(inst.at(l), set).value;
          const Value slow = exhaustive_truncated_value(untruncated[l - 1], m, set);
          if (fast != slow) out.fail("pair " + std::to_string(t) + " S=" + to_string(set));
          ++queries;
        }
      }
      ++instances;
    }
  }
  out.detail << "12 pairs, " << instances << " IT instances, " << queries << " subsets";
}

// 4. Recovery preserves the approximation ratio of every SADP solution.
void recovery_round_trip(Outcome& out) {
  std::size_t checked = 0;
  for (const auto& f : testing::odp_fixtures()) {
    const Value opt = brute_force_odp(f.v, f.w).value;
    for (std::size_t k : {2u, 3u}) {
      for (Construction c : {Construction::kItemTruncation, Construction::kValueTruncation}) {
        const SADPInstance inst = build(c, f.v, f.w, k);
        const SadpGaps g = sadp_gaps(inst);
        for (Mask s = 0; s < (Mask{1} << inst.ground_size()); ++s) {
          const ItemSet set = ItemSet::from_mask(inst.ground_size(), s);
          const Recovery r = recover(set, inst);
          const Value achieved = value(f.v, r.set) - value(f.w, r.set);
          if (achieved != r.achieved ||
              Rational(achieved) < sadp_eval(g, inst, set).best_ratio * opt) {
            out.fail(f.name + " " + to_string(c) + " k=" + std::to_string(k) + " S=" +
                     to_string(set));
          }
          ++checked;
        }
      }
    }
  }
  out.detail << testing::odp_fixtures().size() << " fixture pairs, k in {2,3}, it and vt, "
             << checked << " SADP solutions";
}

// 5. Balancedness within 2 m w([m]) (it) and 2 v([m]) (vt).
void balance(Outcome& out) {
  std::size_t checked = 0, degenerate = 0;
  Rational worst_it(0), worst_vt(0);
  for (const auto& f : testing::odp_fixtures()) {
    if (brute_force_odp(f.v, f.w).value == 0) {
      ++degenerate;
      continue;
    }
    const Value m = static_cast<Value>(f.v.ground_size());
    const ItemSet full = ItemSet::full(f.v.ground_size());
    for (std::size_t k : {2u, 3u, 4u}) {
      const Rational d_it = balancedness(build_IT(f.v, f.w, k));
      const Rational d_vt = balancedness(build_VT(f.v, f.w, k));
      const Rational b_it(2 * m * value(f.w, full)), b_vt(2 * value(f.v, full));
      if (d_it > b_it) out.fail(f.name + " it k=" + std::to_string(k));
      if (d_vt > b_vt) out.fail(f.name + " vt k=" + std::to_string(k));
      worst_it = std::max(worst_it, Rational(d_it / b_it));
      worst_vt = std::max(worst_vt, Rational(d_vt / b_vt));
      ++checked;
    }
  }
  out.detail << checked << " (pair, k) instances, largest d/bound it " << to_string(worst_it)
             << ", vt " << to_string(worst_vt) << "; " << degenerate
             << " pairs with ODP optimum 0 have no finite d";
}

// 6. The pipeline witness is C-compatible with C = ceil(k log2(2k max(v, w)([m]))).
void compatibility(Outcome& out) {
  std::size_t checked = 0, skipped = 0;
  for (const auto& f : testing::odp_fixtures()) {
    if (brute_force_odp(f.v, f.w).value == 0) {
      ++skipped;
      continue;
    }
    for (std::size_t k : {2u, 3u, 4u}) {
      const ReductionBundle b = reduce_odp(f.v, f.w, k, Construction::kItemTruncation);
      const ItemSet full = ItemSet::full(b.pair.v.ground_size());
      const Value c1 = 2 * static_cast<Value>(k) *
                       std::max(value(b.pair.v, full), value(b.pair.w, full));
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), BigInt(c1).get_mpz_t(), k);
      const std::uint64_t c = b.witness->c;
      const bool c_ok = (BigInt(1) << c) >= power && (c == 0 || (BigInt(1) << (c - 1)) < power);
      const std::string tag = f.name + " k=" + std::to_string(k);
      if (!c_ok || b.witness->c1 != c1) out.fail(tag + " C");
      if (!b.compatibility || !b.compatibility->ok) out.fail(tag + " not compatible");
      const CCompatibilityReport again = check_C_compatibility(b.instance, *b.witness);
      if (!again.ok) out.fail(tag + " recheck");
      ++checked;
    }
  }
  out.detail << checked << " (pair, k) instances after trivial-item preprocessing; " << skipped
             << " pairs with ODP optimum 0 skipped";
}

// 7. The four-item table and its truncation at two items.
void appendix_table(Outcome& out) {
  const Valuation v = appendix_counterexample();
  const auto table = tabulate(v);
  const PropertyReport base = check_properties(v);
  if (!base.monotone || !base.submodular || !base.normalized) out.fail("table not monotone submodular");
  const Valuation t = item_truncate(v, 2);
  const auto truncated = tabulate(t);
  for (Mask s = 0; s < 16; ++s) {
    Value best = 0;
    for (Mask u = s;; u = (u - 1) & s) {
      if (std::popcount(u) <= 2) best = std::max(best, table[u]);
      if (u == 0) break;
    }
    if (truncated[s] != best) out.fail("truncated table at " + to_string(ItemSet::from_mask(4, s)));
  }
  const PropertyReport r = check_properties(t);
  const bool witness = r.submodular_violation && r.submodular_violation->base == ItemSet(4, {0, 1}) &&
                       r.submodular_violation->y == 2 && r.submodular_violation->z == 3;
  if (r.submodular || !witness) out.fail("truncation violation witness");
  const Value lhs = truncated[0b1111] - truncated[0b1011];
  const Value rhs = truncated[0b0111] - truncated[0b0011];
  if (lhs != 1 || rhs != 0) out.fail("marginals");
  out.detail << "v'(abcd)-v'(abd) = " << lhs << " > " << rhs << " = v'(abc)-v'(ab) at X={a,b}";
}

// 8. Success rates of the built-in algorithms against s/x + 1/(x-s).
void game_bound(Outcome& out) {
  const PerturbableFamily f = boxs_family(8);
  const std::uint64_t trials = 10000, budget = 10;
  const double bound = theoretical_bound(budget, f.x).get_d();
  const double sigma = std::sqrt(bound * (1 - bound) / trials);
  const double guess = 1.0 / static_cast<double>(f.x);
  const double guess_sigma = std::sqrt(guess * (1 - guess) / trials);
  std::vector<std::uint64_t> counts(f.x, 0);
  out.detail << "bound 67/420 + 3 sigma = " << bound + 3 * sigma << ";";
  for (auto& alg : builtin_algorithms()) {
    for (bool demand_game : {false, true}) {
      const GameTranscript t = demand_game ? run_demand_game(*alg, f, budget, trials, 42)
                                           : run_value_game(*alg, f, budget, trials, 42);
      const double rate = t.success_rate();
      if (rate > bound + 3 * sigma) out.fail(t.algorithm + " " + t.game);
      if (alg->name() == "zero-query" && std::abs(rate - guess) > 3 * guess_sigma) {
        out.fail("zero-query " + t.game + " rate far from 1/70");
      }
      if (alg->name() == "zero-query" && !demand_game) {
        for (auto r : t.hidden_ranks) ++counts[r - 1];
      }
      out.detail << " " << t.algorithm << "/" << t.game << " " << rate;
    }
  }
  double chi2 = 0;
  const double expected = static_cast<double>(trials) / static_cast<double>(f.x);
  for (auto c : counts) chi2 += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(f.x - 1));
  const double p = boost::math::cdf(boost::math::complement(dist, chi2));
  if (p < 1e-3) out.fail("hidden ranks not uniform");
  out.detail << "; hidden-rank uniformity p = " << p;
}

TypeDistribution uniform_types(std::vector<Valuation> types) {
  std::vector<TypeEntry> e;
  for (auto& v : types) e.push_back({std::move(v), ratio(1, static_cast<Value>(types.size()))});
  return TypeDistribution(std::move(e));
}

// 9. LP optimum against posted prices, the trivial bundle, and the residuals.
void mdmdp(Outcome& out) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + t % 5;
    std::vector<TypeEntry> e;
    std::vector<Value> weights(n);
    Value total = 0;
    for (auto& w : weights) total += (w = 1 + static_cast<Value>(rng() % 6));
    for (std::size_t i = 0; i < n; ++i) {
      e.push_back({Valuation::additive({1 + static_cast<Value>(rng() % 12)}), ratio(weights[i], total)});
    }
    const TypeDistribution d(std::move(e));
    Rational posted(0);
    for (const auto& cand : d.entries()) {
      const Value price = value(cand.valuation, ItemSet::full(1));
      Rational rev(0);
      for (const auto& x : d.entries()) {
        if (value(x.valuation, ItemSet::full(1)) >= price) rev += x.probability * price;
      }
      posted = std::max(posted, rev);
    }
    if (lp_optimal_mdmdp(d).revenue != posted) out.fail("single-item distribution " + std::to_string(t));
  }

  const PerturbableFamily f2 = boxs_family(2), f4 = boxs_family(4);
  std::vector<TypeDistribution> fixtures;
  fixtures.push_back(TypeDistribution({{Valuation::additive({2, 3}), Rational(1)}}));
  fixtures.push_back(TypeDistribution({{Valuation::additive({1}), ratio(1, 2)},
                                       {Valuation::additive({2}), ratio(1, 2)}}));
  fixtures.push_back(TypeDistribution({{Valuation::additive({10}), ratio(1, 10)},
                                       {Valuation::additive({3}), ratio(9, 10)}}));
  fixtures.push_back(uniform_types({Valuation::additive({2, 3}), Valuation::additive({2, 3}),
                                    Valuation::additive({2, 3})}));
  fixtures.push_back(uniform_types({Valuation::additive({4, 1}), Valuation::additive({1, 4}),
                                    Valuation::explicit_table(2, {0, 3, 3, 6})}));
  fixtures.push_back(uniform_types({f2.base, perturb(f2, ItemSet(2, {0})), perturb(f2, ItemSet(2, {1}))}));
  fixtures.push_back(uniform_types({f4.base, perturb(f4, ItemSet(4, {0, 1})), perturb(f4, ItemSet(4, {2, 3})),
                                    scale(f4.base, 2)}));
  const SADPInstance it = build_IT(f2.base, perturb(f2, ItemSet(2, {0})), 3);
  fixtures.push_back(uniform_types(it.valuations()));
  fixtures.push_back(uniform_types({Valuation::matroid_based(WeightedMatroid(Matroid::uniform(3, 1), {5, 3, 2})),
                                    Valuation::additive({1, 2, 4}), Valuation::c_demand(2, {3, 3, 1})}));
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const TypeDistribution& d = fixtures[i];
    const MenuSolution lp = lp_optimal_mdmdp(d);
    const TrivialBundle tb = trivial_bundle_menu(d);
    const Rational k(static_cast<long>(d.size()));
    if (lp.revenue < tb.revenue || tb.revenue < lp.revenue / k) out.fail("fixture " + std::to_string(i) + " ordering");
    for (const Menu* m : {&lp.menu, &tb.menu}) {
      const MenuResiduals r = verify_menu(d, *m);
      if (!r.lotteries_valid || r.max_ic_violation > Rational(1, 1000000000) ||
          r.max_ir_violation > Rational(1, 1000000000)) {
        out.fail("fixture " + std::to_string(i) + " residuals");
      }
    }
  }
  out.detail << "25 single-item distributions match posted prices exactly; " << fixtures.size()
             << " fixtures satisfy LP >= trivial >= LP/k with zero residuals";
}

// 10. Parameter formulas.
void parameters(Outcome& out) {
  if (quality_formula(ratio(1, 2), Rational(4), 9) != ratio(1, 4)) out.fail("quality(1/2, 4, 9)");
  for (std::size_t m : {2u, 3u, 4u, 6u}) {
    for (long k : {2L, 5L, 17L, 1000L}) {
      const Rational m2(static_cast<long>(m * m));
      const Rational expect = m2 / (Rational(k - 1) + m2);
      const HardnessBudget b = hardness_budget_for_k(m, BigInt(k));
      if (b.bound != expect || b.items != BigInt(k - 1) * static_cast<long>(m)) {
        out.fail("bound m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
  }
  if (hardness_budget_for_k(4, BigInt(17)).bound != ratio(1, 2)) out.fail("m=4 k=17");
  if (hardness_budget(4, ratio(1, 2)).k != 256) out.fail("k = ceil(m^(2/eps))");
  out.detail << "quality(1/2,4,9) = " << to_string(quality_formula(ratio(1, 2), Rational(4), 9))
             << ", bound(m=4,k=17) = " << to_string(hardness_budget_for_k(4, BigInt(17)).bound);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "edge-removal perturbation equals pointwise perturbation", 10, perturbation_equivalence},
      {2, "item truncation equals truncated-matroid valuation", 30, truncated_matroid},
      {3, "greedy truncated values equal exhaustive values", 60, query_sufficiency},
      {4, "recovery preserves the SADP approximation ratio", 300, recovery_round_trip},
      {5, "balancedness within 2 m w([m]) and 2 v([m])", 300, balance},
      {6, "witness is C-compatible", 300, compatibility},
      {7, "four-item table and its truncation", 10, appendix_table},
      {8, "query-game success within s/x + 1/(x-s) + 3 sigma", 120, game_bound},
      {9, "LP optimum, posted prices and trivial bundle", 120, mdmdp},
      {10, "parameter formulas", 10, parameters},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) out.fail("took longer than the limit");
    failures += out.ok ? 0 : 1;
    std::cout << "criterion " << c.id << ": " << (out.ok ? "PASS" : "FAIL") << " (" << c.name
              << "; " << out.detail.str() << "; "
              << (out.ok ? "" : "first failure: " + out.first_failure + "; ") << seconds << " s, limit " << c.limit_seconds
              << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
