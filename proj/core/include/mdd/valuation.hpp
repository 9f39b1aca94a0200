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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mdd/item_set.hpp"
#include "mdd/matroid.hpp"
#include "mdd/numeric.hpp"

namespace mdd {

class Valuation;

/// CNF over variables 1..num_vars; DIMACS literals (+j is x_j, -j is not x_j).
struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  /// Bit j-1 of `assignment` is the value of x_j.
  bool satisfied_by(std::uint64_t assignment) const;
};

namespace valuation_kind {

/// One value per subset, indexed by mask.
struct ExplicitTable {
  std::shared_ptr<const std::vector<Value>> values;
};

struct Additive {
  std::vector<Value> weights;
};

/// Sum of the `capacity` largest weights in S.
struct CDemand {
  std::size_t capacity;
  std::vector<Value> weights;
};

/// Left nodes are the items; weights row-major, one row per item.
struct Oxs {
  std::size_t right_size;
  std::vector<Value> weights;
};

struct MatroidBased {
  std::shared_ptr<const WeightedMatroid> weighted;
};

/// Base value minus one on the perturbing set (size m/2) whose lexicographic
/// rank r satisfies r <= 2^num_vars and the assignment r-1 satisfies the CNF.
struct SatPerturbed {
  std::shared_ptr<const Valuation> base;
  Cnf cnf;
};

/// Pointwise perturbation: base value minus one exactly at `at`.
struct Perturbed {
  std::shared_ptr<const Valuation> base;
  ItemSet at;
};

struct Scaled {
  Value factor;
  std::shared_ptr<const Valuation> inner;
};

/// Part i owns items [offsets[i], offsets[i] + parts[i].ground_size()).
struct DisjointUnion {
  std::vector<Valuation> parts;
  std::vector<std::size_t> offsets;
};

/// Best inner value over subsets of size at most y. `cap` bounds the
/// exhaustive fallback used when no greedy fast path applies.
struct ItemTruncated {
  std::size_t y;
  std::shared_ptr<const Valuation> inner;
  std::size_t cap;
};

struct ValueTruncated {
  Value x;
  std::shared_ptr<const Valuation> inner;
};

/// Inner valuation seen through the items `kept` (re-indexed 0..|kept|-1).
struct Restricted {
  std::shared_ptr<const Valuation> inner;
  std::vector<Item> kept;
};

}  // namespace valuation_kind

/// Immutable valuation over items [0, ground_size). Copies share structure.
class Valuation {
 public:
  using Kind = std::variant<valuation_kind::ExplicitTable, valuation_kind::Additive,
                            valuation_kind::CDemand, valuation_kind::Oxs,
                            valuation_kind::MatroidBased, valuation_kind::SatPerturbed,
                            valuation_kind::Perturbed, valuation_kind::Scaled,
                            valuation_kind::DisjointUnion, valuation_kind::ItemTruncated,
                            valuation_kind::ValueTruncated, valuation_kind::Restricted>;

  static Valuation explicit_table(std::size_t ground_size, std::vector<Value> values_by_mask);
  static Valuation additive(std::vector<Value> weights);
  static Valuation c_demand(std::size_t capacity, std::vector<Value> weights);
  static Valuation oxs(std::size_t ground_size, std::size_t right_size, std::vector<Value> weights);
  static Valuation matroid_based(WeightedMatroid wm);
  static Valuation sat_perturbed(Valuation base, Cnf cnf);
  static Valuation perturbed(Valuation base, ItemSet at);
  static Valuation scaled(Value factor, Valuation inner);
  static Valuation disjoint_union(std::vector<Valuation> parts);
  static Valuation item_truncated(std::size_t y, Valuation inner, std::size_t cap = kDefaultEnumCap);
  static Valuation value_truncated(Value x, Valuation inner);
  static Valuation restricted(Valuation inner, std::vector<Item> kept);

  std::size_t ground_size() const { return ground_size_; }
  const Kind& kind() const { return *kind_; }
  /// Short class name ("additive", "oxs", ...).
  std::string kind_name() const;

 private:
  Valuation(std::size_t ground_size, Kind kind)
      : ground_size_(ground_size), kind_(std::make_shared<const Kind>(std::move(kind))) {}

  std::size_t ground_size_ = 0;
  std::shared_ptr<const Kind> kind_;
};

/// Counts value queries that reach a non-wrapper valuation on a non-empty set.
struct QueryStats {
  std::uint64_t base_queries = 0;
};

Value value(const Valuation& v, const ItemSet& s, QueryStats* stats = nullptr);
Value value(const Valuation& v, Mask s);

/// Values of every subset, indexed by mask.
std::vector<Value> tabulate(const Valuation& v, std::size_t cap = kDefaultEnumCap);

/// Exhaustive demand over a value table with lexicographically smallest
/// tie-breaking. Keeps the lexicographic visiting order between calls.
class DemandSolver {
 public:
  DemandSolver(std::size_t ground_size, std::size_t cap = kDefaultEnumCap);

  ItemSet solve(std::span<const Value> values_by_mask, std::span<const Rational> prices) const;
  std::size_t ground_size() const { return ground_size_; }

 private:
  /// Integer path after scaling prices to a common denominator; empty when
  /// the scaled quantities could overflow.
  std::optional<Mask> solve_scaled(std::span<const Value> values_by_mask,
                                   std::span<const Rational> prices) const;

  std::size_t ground_size_;
  std::vector<Mask> lex_order_;
};

/// A set in argmax_T v(T) - sum_{i in T} p_i; ties go to the
/// lexicographically smallest member list.
ItemSet demand(const Valuation& v, std::span<const Rational> prices,
               std::size_t cap = kDefaultEnumCap);

/// Matroid greedy demand: descending w_i - p_i, keep if positive and
/// independent. Attains the optimal surplus; may pick a different tie.
ItemSet matroid_demand_greedy(const WeightedMatroid& wm, std::span<const Rational> prices);

/// v(T) - sum_{i in T} p_i.
Rational surplus(const Valuation& v, const ItemSet& t, std::span<const Rational> prices);

struct MonotoneViolation {
  ItemSet smaller;  // v(smaller) > v(larger) although smaller is a subset
  ItemSet larger;
};

/// v(X+y+z) - v(X+y) > v(X+z) - v(X).
struct SubmodularViolation {
  ItemSet base;
  Item y;
  Item z;
};

struct PropertyReport {
  bool normalized = true;
  Value empty_value = 0;
  bool monotone = true;
  std::optional<MonotoneViolation> monotone_violation;
  std::vector<Item> trivial_items;
  bool submodular = true;
  std::optional<SubmodularViolation> submodular_violation;
};

PropertyReport check_properties(const Valuation& v, std::size_t cap = kDefaultEnumCap);

struct PreprocessedPair {
  Valuation v;
  Valuation w;
  ItemSet removed_for_v;   // v({i}) = 0
  ItemSet removed_for_w;   // w({i}) = 0; re-inserted into solutions
  std::vector<Item> kept;  // reduced index -> original item
  std::size_t original_ground = 0;

  /// Maps a solution of the reduced pair back to the original ground and
  /// re-inserts the w-trivial items.
  ItemSet lift(const ItemSet& reduced_solution) const;
};

/// Drops every item that is trivial for v or for w. Identity (same
/// valuation objects) when there is nothing to remove.
PreprocessedPair preprocess_trivial_items(const Valuation& v, const Valuation& w);

struct TypeEntry {
  Valuation valuation;
  Rational probability;
};

/// Finite support with exact probabilities summing to one.
class TypeDistribution {
 public:
  explicit TypeDistribution(std::vector<TypeEntry> entries);

  const std::vector<TypeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t ground_size() const { return ground_size_; }

 private:
  std::vector<TypeEntry> entries_;
  std::size_t ground_size_ = 0;
};

}  // namespace mdd
