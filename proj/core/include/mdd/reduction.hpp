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
#include <optional>
#include <string>
#include <vector>

#include "mdd/sadp.hpp"
#include "mdd/solvers.hpp"

namespace mdd {

/// Scaled disjoint union of (v, w) with k copies' worth of coefficients,
/// each output item-truncated at m.
SADPInstance build_IT(const Valuation& v, const Valuation& w, std::size_t k,
                      std::size_t cap = kDefaultEnumCap);

/// Scaled disjoint union of (v, w), each output value-truncated at 2k v([m]).
SADPInstance build_VT(const Valuation& v, const Valuation& w, std::size_t k);

SADPInstance build(Construction c, const Valuation& v, const Valuation& w, std::size_t k,
                   std::size_t cap = kDefaultEnumCap);

struct Recovery {
  ItemSet set;         // over the source ground
  Value achieved = 0;  // v(set) - w(set)
  /// Copy whose slice was chosen (1-based); k for the empty candidate.
  std::size_t index = 0;
  /// IT only: per-l refinement S^l of the SADP solution.
  std::vector<ItemSet> refined;
};

Recovery recover_from_IT(const ItemSet& s, const SADPInstance& inst);
Recovery recover_from_VT(const ItemSet& s, const SADPInstance& inst);
Recovery recover(const ItemSet& s, const SADPInstance& inst);

struct ReductionReport {
  std::vector<Value> gaps;
  std::vector<ItemSet> gap_argmax;
  Value last_full = 0;                 // v_k(full ground)
  std::optional<Rational> d;           // empty when some gap is 0
  std::optional<Rational> bound;       // 2 m w([m]) for IT, 2 v([m]) for VT
  bool within_bound = false;
  std::optional<std::uint64_t> compatibility_c;
};

/// Computes the gaps and d without throwing on degenerate instances.
ReductionReport reduction_report(const SADPInstance& inst, std::size_t cap = kDefaultEnumCap);

/// v_k(full ground) / min_l gap_l. Throws InvalidArgument when a gap is 0.
Rational balancedness(const SADPInstance& inst, std::size_t cap = kDefaultEnumCap);

struct CompatibilityWitness {
  std::vector<ItemSet> allocations;  // X_1..X_k
  std::vector<BigInt> multipliers;   // Q_1..Q_k
  std::uint64_t c = 0;
  Value c1 = 0;
};

/// Smallest C with 2^C >= base^k, i.e. ceil(k log2 base); 0 when base <= 1.
std::uint64_t ceil_k_log2(std::size_t k, Value base);

/// X_l places argmax(v - w) in copy l (copy k-1 for l = k), Q_i = (C1+1)^(i-1)
/// with C1 = 2k max(v([m]), w([m])).
CompatibilityWitness witness_for_IT(const Valuation& v, const Valuation& w, std::size_t k,
                                    std::size_t cap = kDefaultEnumCap);

struct CompatibilityCheck {
  bool ok = true;
  /// First failure: i == j flags the identity matching on the full grid,
  /// otherwise the shifted matching on allocations X_i..X_{j-1} (1-based).
  std::optional<std::pair<std::size_t, std::size_t>> violated;
  Rational attained;
  Rational maximum;
};

/// Grid W[i][j] = Q_j v_j(X_i).
CompatibilityCheck check_compatibility(const std::vector<Valuation>& valuations,
                                       const std::vector<BigInt>& multipliers,
                                       const std::vector<ItemSet>& allocations);

struct CCompatibilityReport {
  bool ok = false;
  bool multipliers_ok = false;
  std::optional<std::size_t> gap_failure;  // first l with X_l off the gap argmax
  CompatibilityCheck compatibility;
};

CCompatibilityReport check_C_compatibility(const SADPInstance& inst,
                                           const CompatibilityWitness& witness,
                                           std::size_t cap = kDefaultEnumCap);

/// alpha - (1 - alpha) d / (k - 1), clamped below at 0.
Rational quality_formula(const Rational& alpha, const Rational& d, std::size_t k);

struct HardnessBudget {
  BigInt k;
  BigInt items;    // (k - 1) m
  BigInt support;  // k
  Rational bound;  // m^2 / (k - 1 + m^2)
};

/// k = ceil(m^(2/eps)). Throws ArithmeticOverflow when k needs more than max_bits bits.
HardnessBudget hardness_budget(std::size_t m, const Rational& eps, std::size_t max_bits = 4096);
HardnessBudget hardness_budget_for_k(std::size_t m, const BigInt& k);

/// Full pipeline on an ODP pair: drop trivial items, build the SADP
/// instance, and certify it.
struct ReductionBundle {
  PreprocessedPair pair;
  SADPInstance instance;
  ReductionReport report;
  std::optional<CompatibilityWitness> witness;  // IT only
  std::optional<CCompatibilityReport> compatibility;
};

ReductionBundle reduce_odp(const Valuation& v, const Valuation& w, std::size_t k, Construction c,
                           std::size_t cap = kDefaultEnumCap);

}  // namespace mdd
