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

#include "mdd/games.hpp"

#include <algorithm>
#include <unordered_set>

namespace mdd {

ValueOracle::ValueOracle(const PerturbableFamily& family, const ItemSet& hidden,
                         const std::vector<Value>& base_table, std::size_t budget)
    : perturbed_(perturb(family, hidden)),
      hidden_(hidden.mask()),
      base_table_(base_table),
      budget_(budget) {}

Value ValueOracle::query(const ItemSet& s) {
  if (used_ >= budget_) {
    throw BudgetExceeded("value query " + std::to_string(used_ + 1) + " exceeds budget " +
                         std::to_string(budget_));
  }
  ++used_;
  const Value answer = value(perturbed_, s);
  if (answer != base_table_[s.mask()] && s.mask() != hidden_) {
    throw std::logic_error("perturbed oracle differs from the base away from the hidden set");
  }
  return answer;
}

DemandOracle::DemandOracle(const DemandSolver& solver, std::vector<Value> perturbed_table,
                           std::size_t budget)
    : solver_(solver), table_(std::move(perturbed_table)), budget_(budget) {}

ItemSet DemandOracle::query(std::span<const Rational> prices) {
  if (used_ >= budget_) {
    throw BudgetExceeded("demand query " + std::to_string(used_ + 1) + " exceeds budget " +
                         std::to_string(budget_));
  }
  ++used_;
  return solver_.solve(table_, prices);
}

std::vector<Rational> isolating_prices(std::size_t m, const ItemSet& t) {
  std::vector<Rational> p(m, Rational(2));
  for (Item i : t) p[i] = Rational(1, static_cast<unsigned long>(m));
  return p;
}

namespace {

ItemSet candidate(const GameContext& ctx, std::uint64_t rank) {
  return subset_unrank(ctx.family.m, ctx.family.m / 2, rank);
}

bool value_test(const GameContext& ctx, ValueOracle& oracle, const ItemSet& t) {
  return oracle.query(t) < value(ctx.family.base, t);
}

bool demand_test(const GameContext& ctx, DemandOracle& oracle, const ItemSet& t) {
  const auto prices = isolating_prices(ctx.family.m, t);
  return oracle.query(prices) != t;
}

template <typename Test>
ItemSet random_probe(const GameContext& ctx, std::mt19937_64& rng, Test test) {
  const std::uint64_t x = ctx.family.x;
  std::unordered_set<std::uint64_t> tested;
  const std::uint64_t probes = std::min<std::uint64_t>(ctx.budget, x);
  for (std::uint64_t q = 0; q < probes; ++q) {
    std::uint64_t r = 0;
    do {
      r = uniform_below(rng, x) + 1;
    } while (tested.count(r) != 0);
    tested.insert(r);
    ItemSet t = candidate(ctx, r);
    if (test(t)) return t;
  }
  if (tested.size() == x) return candidate(ctx, 1);
  std::uint64_t r = 0;
  do {
    r = uniform_below(rng, x) + 1;
  } while (tested.count(r) != 0);
  return candidate(ctx, r);
}

template <typename Test>
ItemSet scan(const GameContext& ctx, Test test) {
  const std::uint64_t x = ctx.family.x;
  const std::uint64_t probes = std::min<std::uint64_t>(ctx.budget, x);
  for (std::uint64_t r = 1; r <= probes; ++r) {
    ItemSet t = candidate(ctx, r);
    if (test(t)) return t;
  }
  return candidate(ctx, probes < x ? probes + 1 : 1);
}

}  // namespace

ItemSet ZeroQueryGuesser::play_value(const GameContext& ctx, ValueOracle&, std::mt19937_64&) {
  return candidate(ctx, 1);
}

ItemSet ZeroQueryGuesser::play_demand(const GameContext& ctx, DemandOracle&, std::mt19937_64&) {
  return candidate(ctx, 1);
}

ItemSet RandomProber::play_value(const GameContext& ctx, ValueOracle& oracle,
                                 std::mt19937_64& rng) {
  return random_probe(ctx, rng, [&](const ItemSet& t) { return value_test(ctx, oracle, t); });
}

ItemSet RandomProber::play_demand(const GameContext& ctx, DemandOracle& oracle,
                                  std::mt19937_64& rng) {
  return random_probe(ctx, rng, [&](const ItemSet& t) { return demand_test(ctx, oracle, t); });
}

ItemSet ExhaustiveScanner::play_value(const GameContext& ctx, ValueOracle& oracle,
                                      std::mt19937_64&) {
  return scan(ctx, [&](const ItemSet& t) { return value_test(ctx, oracle, t); });
}

ItemSet ExhaustiveScanner::play_demand(const GameContext& ctx, DemandOracle& oracle,
                                       std::mt19937_64&) {
  return scan(ctx, [&](const ItemSet& t) { return demand_test(ctx, oracle, t); });
}

std::vector<std::unique_ptr<OracleAlgorithm>> builtin_algorithms() {
  std::vector<std::unique_ptr<OracleAlgorithm>> out;
  out.push_back(std::make_unique<ZeroQueryGuesser>());
  out.push_back(std::make_unique<RandomProber>());
  out.push_back(std::make_unique<ExhaustiveScanner>());
  return out;
}

std::unique_ptr<OracleAlgorithm> make_algorithm(std::string_view name) {
  for (auto& alg : builtin_algorithms()) {
    if (alg->name() == name) return std::move(alg);
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) +
                        "' (expected zero-query, random-prober or exhaustive-scanner)");
}

Rational theoretical_bound(std::uint64_t s, std::uint64_t x) {
  if (s >= x) throw InvalidArgument("bound needs s < x");
  Rational out = Rational(s, x) + Rational(1, x - s);
  out.canonicalize();
  return out;
}

double GameTranscript::success_rate() const {
  const std::uint64_t played = trials - voided;
  return played == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(played);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(mix_seed(seed ^ mix_seed(trial)));
}

namespace {

template <typename Play>
GameTranscript run_game(const char* game, OracleAlgorithm& alg, const PerturbableFamily& family,
                        std::size_t budget, std::uint64_t trials, std::uint64_t seed,
                        Play play) {
  if (trials < 1) throw InvalidArgument("a game needs at least one trial");
  GameTranscript out;
  out.game = game;
  out.algorithm = alg.name();
  out.m = family.m;
  out.x = family.x;
  out.budget = budget;
  out.seed = seed;
  out.trials = trials;
  if (budget < family.x) out.bound = theoretical_bound(budget, family.x);
  out.query_counts.reserve(trials);
  out.hidden_ranks.reserve(trials);
  const GameContext ctx{family, budget};
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = trial_engine(seed, t);
    const std::uint64_t rank = uniform_below(rng, family.x) + 1;
    const ItemSet hidden = subset_unrank(family.m, family.m / 2, rank);
    out.hidden_ranks.push_back(rank);
    std::size_t used = 0;
    try {
      if (play(ctx, hidden, rng, used) == hidden) ++out.successes;
    } catch (const BudgetExceeded&) {
      ++out.voided;
    }
    out.query_counts.push_back(static_cast<std::uint32_t>(used));
  }
  return out;
}

}  // namespace

GameTranscript run_value_game(OracleAlgorithm& alg, const PerturbableFamily& family,
                              std::size_t budget, std::uint64_t trials, std::uint64_t seed) {
  const auto base = tabulate(family.base);
  return run_game("value", alg, family, budget, trials, seed,
                  [&](const GameContext& ctx, const ItemSet& hidden, std::mt19937_64& rng,
                      std::size_t& used) {
                    ValueOracle oracle(family, hidden, base, budget);
                    struct Count {
                      ValueOracle& o;
                      std::size_t& used;
                      ~Count() { used = o.used(); }
                    } count{oracle, used};
                    return alg.play_value(ctx, oracle, rng);
                  });
}

GameTranscript run_demand_game(OracleAlgorithm& alg, const PerturbableFamily& family,
                               std::size_t budget, std::uint64_t trials, std::uint64_t seed) {
  const DemandSolver solver(family.m);
  std::vector<std::vector<Value>> tables(family.x);
  return run_game("demand", alg, family, budget, trials, seed,
                  [&](const GameContext& ctx, const ItemSet& hidden, std::mt19937_64& rng,
                      std::size_t& used) {
                    auto& table = tables[subset_rank(family.m, hidden) - 1];
                    if (table.empty()) table = tabulate(perturb(family, hidden));
                    DemandOracle oracle(solver, table, budget);
                    struct Count {
                      DemandOracle& o;
                      std::size_t& used;
                      ~Count() { used = o.used(); }
                    } count{oracle, used};
                    return alg.play_demand(ctx, oracle, rng);
                  });
}

}  // namespace mdd
