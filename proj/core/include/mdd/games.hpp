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
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdd/instances.hpp"

namespace mdd {

/// Thrown by an oracle when an algorithm asks one query past its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value access to the hidden perturbation v_S of a family.
class ValueOracle {
 public:
  ValueOracle(const PerturbableFamily& family, const ItemSet& hidden,
              const std::vector<Value>& base_table, std::size_t budget);

  Value query(const ItemSet& s);
  std::size_t used() const { return used_; }
  std::size_t budget() const { return budget_; }

 private:
  Valuation perturbed_;
  Mask hidden_;
  const std::vector<Value>& base_table_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

/// Demand access to the hidden perturbation v_S; ties go to the
/// lexicographically smallest set.
class DemandOracle {
 public:
  DemandOracle(const DemandSolver& solver, std::vector<Value> perturbed_table, std::size_t budget);

  ItemSet query(std::span<const Rational> prices);
  std::size_t used() const { return used_; }
  std::size_t budget() const { return budget_; }

 private:
  const DemandSolver& solver_;
  std::vector<Value> table_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

struct GameContext {
  const PerturbableFamily& family;
  std::size_t budget;
};

/// A guessing strategy. All randomness must come from `rng`.
class OracleAlgorithm {
 public:
  virtual ~OracleAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual ItemSet play_value(const GameContext& ctx, ValueOracle& oracle,
                             std::mt19937_64& rng) = 0;
  virtual ItemSet play_demand(const GameContext& ctx, DemandOracle& oracle,
                              std::mt19937_64& rng) = 0;
};

/// Asks nothing and guesses the rank-1 perturbing set.
class ZeroQueryGuesser : public OracleAlgorithm {
 public:
  std::string name() const override { return "zero-query"; }
  ItemSet play_value(const GameContext& ctx, ValueOracle& oracle, std::mt19937_64& rng) override;
  ItemSet play_demand(const GameContext& ctx, DemandOracle& oracle, std::mt19937_64& rng) override;
};

/// Tests one uniformly random untested candidate per query, then guesses a
/// random untested candidate.
class RandomProber : public OracleAlgorithm {
 public:
  std::string name() const override { return "random-prober"; }
  ItemSet play_value(const GameContext& ctx, ValueOracle& oracle, std::mt19937_64& rng) override;
  ItemSet play_demand(const GameContext& ctx, DemandOracle& oracle, std::mt19937_64& rng) override;
};

/// Tests candidates in rank order, then guesses the next one.
class ExhaustiveScanner : public OracleAlgorithm {
 public:
  std::string name() const override { return "exhaustive-scanner"; }
  ItemSet play_value(const GameContext& ctx, ValueOracle& oracle, std::mt19937_64& rng) override;
  ItemSet play_demand(const GameContext& ctx, DemandOracle& oracle, std::mt19937_64& rng) override;
};

std::vector<std::unique_ptr<OracleAlgorithm>> builtin_algorithms();
std::unique_ptr<OracleAlgorithm> make_algorithm(std::string_view name);

/// Prices 1/m on `t` and 2 elsewhere: under the base valuation `t` (of size
/// m/2) is the unique demanded set.
std::vector<Rational> isolating_prices(std::size_t m, const ItemSet& t);

/// s/x + 1/(x - s).
Rational theoretical_bound(std::uint64_t s, std::uint64_t x);

struct GameTranscript {
  std::string game;  // "value" or "demand"
  std::string algorithm;
  std::size_t m = 0;
  std::uint64_t x = 0;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t voided = 0;
  std::vector<std::uint32_t> query_counts;
  std::vector<std::uint64_t> hidden_ranks;
  std::optional<Rational> bound;  // when budget < x

  double success_rate() const;
};

GameTranscript run_value_game(OracleAlgorithm& alg, const PerturbableFamily& family,
                              std::size_t budget, std::uint64_t trials, std::uint64_t seed);
GameTranscript run_demand_game(OracleAlgorithm& alg, const PerturbableFamily& family,
                               std::size_t budget, std::uint64_t trials, std::uint64_t seed);

/// Per-trial generator derived from the game seed.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

}  // namespace mdd
