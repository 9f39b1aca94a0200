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

#include "mdd/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "mdd/matching.hpp"
#include "mdd/transforms.hpp"

namespace mdd {

namespace {

const Provenance& require_provenance(const SADPInstance& inst, Construction c) {
  const auto& p = inst.provenance();
  if (!p || p->construction != c) {
    throw InvalidArgument("instance does not have " + to_string(c) + " provenance");
  }
  return *p;
}

Value slice_difference(const Provenance& p, const ItemSet& a) {
  return value(p.v, a) - value(p.w, a);
}

}  // namespace

SADPInstance build_IT(const Valuation& v, const Valuation& w, std::size_t k, std::size_t cap) {
  const std::size_t m = v.ground_size();
  std::vector<Valuation> out;
  for (const auto& p : scaled_disjoint_union(v, w, k)) out.push_back(item_truncate(p, m, cap));
  return SADPInstance(std::move(out),
                      Provenance{v, w, Construction::kItemTruncation, static_cast<Value>(m)});
}

SADPInstance build_VT(const Valuation& v, const Valuation& w, std::size_t k) {
  const Value x = checked_mul(2 * static_cast<Value>(k), value(v, ItemSet::full(v.ground_size())));
  std::vector<Valuation> out;
  for (const auto& p : scaled_disjoint_union(v, w, k)) out.push_back(value_truncate(p, x));
  return SADPInstance(std::move(out), Provenance{v, w, Construction::kValueTruncation, x});
}

SADPInstance build(Construction c, const Valuation& v, const Valuation& w, std::size_t k,
                   std::size_t cap) {
  return c == Construction::kItemTruncation ? build_IT(v, w, k, cap) : build_VT(v, w, k);
}

Recovery recover_from_IT(const ItemSet& s, const SADPInstance& inst) {
  const Provenance& p = require_provenance(inst, Construction::kItemTruncation);
  if (s.ground_size() != inst.ground_size()) throw InvalidArgument("solution over wrong ground");
  const std::size_t m = p.v.ground_size();
  const std::size_t k = inst.k();
  Recovery out;
  bool have = false;
  for (std::size_t l = 1; l <= k; ++l) {
    const Valuation& vl = inst.at(l);
    ItemSet t = s;
    Value current = value(vl, t);
    for (Item i : s) {
      if (t.size() <= m) break;
      ItemSet smaller = t.without(i);
      if (value(vl, smaller) == current) t = std::move(smaller);
    }
    const ItemSet a = l < k ? slice(t, (l - 1) * m, m) : ItemSet(m);
    const Value achieved = slice_difference(p, a);
    if (!have || achieved > out.achieved) {
      have = true;
      out.set = a;
      out.achieved = achieved;
      out.index = l;
    }
    out.refined.push_back(std::move(t));
  }
  return out;
}

Recovery recover_from_VT(const ItemSet& s, const SADPInstance& inst) {
  const Provenance& p = require_provenance(inst, Construction::kValueTruncation);
  if (s.ground_size() != inst.ground_size()) throw InvalidArgument("solution over wrong ground");
  const std::size_t m = p.v.ground_size();
  Recovery out;
  bool have = false;
  for (std::size_t l = 1; l < inst.k(); ++l) {
    ItemSet a = slice(s, (l - 1) * m, m);
    const Value achieved = slice_difference(p, a);
    if (!have || achieved > out.achieved) {
      have = true;
      out.set = std::move(a);
      out.achieved = achieved;
      out.index = l;
    }
  }
  if (out.achieved < 0) out = Recovery{ItemSet(m), 0, inst.k(), {}};
  return out;
}

Recovery recover(const ItemSet& s, const SADPInstance& inst) {
  if (!inst.provenance()) throw InvalidArgument("instance has no provenance to recover through");
  return inst.provenance()->construction == Construction::kItemTruncation
             ? recover_from_IT(s, inst)
             : recover_from_VT(s, inst);
}

std::uint64_t ceil_k_log2(std::size_t k, Value base) {
  if (base <= 1) return 0;
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), k);
  const std::uint64_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
  const bool power_of_two = mpz_scan1(p.get_mpz_t(), 0) == bits - 1;
  return power_of_two ? bits - 1 : bits;
}

ReductionReport reduction_report(const SADPInstance& inst, std::size_t cap) {
  const SadpGaps g = sadp_gaps(inst, cap);
  ReductionReport out;
  out.gaps = g.gaps;
  out.gap_argmax = g.argmax;
  out.last_full = g.last_full;
  const Value min_gap = *std::min_element(g.gaps.begin(), g.gaps.end());
  if (min_gap > 0) {
    out.d = Rational(g.last_full, min_gap);
    out.d->canonicalize();
  }
  if (const auto& p = inst.provenance()) {
    const ItemSet full = ItemSet::full(p->v.ground_size());
    const auto m = static_cast<long>(p->v.ground_size());
    if (p->construction == Construction::kItemTruncation) {
      out.bound = Rational(2 * m) * value(p->w, full);
      const Value c1 = checked_mul(2 * static_cast<Value>(inst.k()),
                                   std::max(value(p->v, full), value(p->w, full)));
      out.compatibility_c = ceil_k_log2(inst.k(), c1);
    } else {
      out.bound = Rational(2) * value(p->v, full);
    }
    out.within_bound = out.d && *out.d <= *out.bound;
  }
  return out;
}

Rational balancedness(const SADPInstance& inst, std::size_t cap) {
  const ReductionReport r = reduction_report(inst, cap);
  if (!r.d) {
    const auto zero = std::find(r.gaps.begin(), r.gaps.end(), 0) - r.gaps.begin();
    throw InvalidArgument("degenerate instance: gap " + std::to_string(zero + 1) +
                          " is 0, so no finite d exists");
  }
  return *r.d;
}

CompatibilityWitness witness_for_IT(const Valuation& v, const Valuation& w, std::size_t k,
                                    std::size_t cap) {
  if (k < 2) throw InvalidArgument("witness needs k >= 2");
  const std::size_t m = v.ground_size();
  const std::size_t ground = (k - 1) * m;
  const ItemSet best = brute_force_odp(v, w, cap).set;
  const ItemSet full = ItemSet::full(m);
  CompatibilityWitness out;
  out.c1 = checked_mul(2 * static_cast<Value>(k), std::max(value(v, full), value(w, full)));
  out.c = ceil_k_log2(k, out.c1);
  BigInt q = 1;
  for (std::size_t l = 1; l <= k; ++l) {
    const std::size_t copy = std::min(l, k - 1);
    out.allocations.push_back(embed(best, (copy - 1) * m, ground));
    out.multipliers.push_back(q);
    q *= out.c1 + 1;
  }
  return out;
}

CompatibilityCheck check_compatibility(const std::vector<Valuation>& valuations,
                                       const std::vector<BigInt>& multipliers,
                                       const std::vector<ItemSet>& allocations) {
  const std::size_t k = valuations.size();
  if (multipliers.size() != k || allocations.size() != k) {
    throw InvalidArgument("compatibility: need one multiplier and one allocation per valuation");
  }
  std::vector<std::vector<Rational>> grid(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      grid[i][j] = Rational(multipliers[j] * value(valuations[j], allocations[i]));
    }
  }
  CompatibilityCheck out;
  auto check = [&](std::size_t row0, std::size_t col0, std::size_t n, std::size_t i,
                   std::size_t j) {
    BipartiteWeights sub(n, n);
    Matching diagonal;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) sub.set(r, c, grid[row0 + r][col0 + c]);
      diagonal.pairs.emplace_back(r, r);
    }
    const Rational attained = matching_weight(sub, diagonal);
    const Rational maximum = max_weight_matching(sub).weight;
    if (attained == maximum) return true;
    out = CompatibilityCheck{false, std::make_pair(i, j), attained, maximum};
    return false;
  };
  if (!check(0, 0, k, 1, 1)) return out;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (!check(i - 1, i, j - i, i, j)) return out;
    }
  }
  return out;
}

CCompatibilityReport check_C_compatibility(const SADPInstance& inst,
                                           const CompatibilityWitness& witness, std::size_t cap) {
  const std::size_t k = inst.k();
  if (witness.allocations.size() != k || witness.multipliers.size() != k) {
    throw InvalidArgument("witness size does not match k = " + std::to_string(k));
  }
  CCompatibilityReport out;
  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, witness.c);
  out.multipliers_ok = witness.multipliers.front() == 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (witness.multipliers[i] > limit) out.multipliers_ok = false;
    if (i > 0 && witness.multipliers[i] <= witness.multipliers[i - 1]) out.multipliers_ok = false;
  }
  const SadpGaps g = sadp_gaps(inst, cap);
  for (std::size_t l = 1; l < k; ++l) {
    const ItemSet& x = witness.allocations[l - 1];
    if (value(inst.at(l), x) - value(inst.at(l + 1), x) != g.gaps[l - 1]) {
      out.gap_failure = l;
      break;
    }
  }
  out.compatibility =
      check_compatibility(inst.valuations(), witness.multipliers, witness.allocations);
  out.ok = out.multipliers_ok && !out.gap_failure && out.compatibility.ok;
  return out;
}

Rational quality_formula(const Rational& alpha, const Rational& d, std::size_t k) {
  if (k < 2) throw InvalidArgument("quality formula needs k >= 2");
  if (alpha < 0 || alpha > 1) throw InvalidArgument("alpha must lie in [0, 1]");
  if (d < 0) throw InvalidArgument("d must be non-negative");
  Rational q = alpha - (1 - alpha) * d / Rational(static_cast<long>(k - 1));
  if (sgn(q) < 0) q = 0;
  return q;
}

HardnessBudget hardness_budget_for_k(std::size_t m, const BigInt& k) {
  if (m < 1) throw InvalidArgument("hardness budget needs m >= 1");
  if (k < 2) throw InvalidArgument("hardness budget needs k >= 2");
  const BigInt mm = BigInt(static_cast<unsigned long>(m));
  HardnessBudget out;
  out.k = k;
  out.items = (k - 1) * mm;
  out.support = k;
  out.bound = Rational(mm * mm) / Rational(k - 1 + mm * mm);
  return out;
}

HardnessBudget hardness_budget(std::size_t m, const Rational& eps, std::size_t max_bits) {
  if (eps <= 0 || eps >= 1) throw InvalidArgument("eps must lie strictly between 0 and 1");
  if (m < 2) throw InvalidArgument("hardness budget needs m >= 2");
  Rational exponent = Rational(2) / eps;  // a / b
  exponent.canonicalize();
  const BigInt& a = exponent.get_num();
  const BigInt& b = exponent.get_den();
  const double log_m = std::log2(static_cast<double>(m));
  const double k_bits = a.get_d() * log_m / b.get_d();
  if (k_bits > static_cast<double>(max_bits) || a.get_d() * log_m > 64.0 * max_bits) {
    throw ArithmeticOverflow("k = ceil(" + std::to_string(m) + "^(" + to_string(exponent) +
                             ")) needs about " + std::to_string(static_cast<long>(k_bits)) +
                             " bits, above the limit of " + std::to_string(max_bits));
  }
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), BigInt(static_cast<unsigned long>(m)).get_mpz_t(), a.get_ui());
  BigInt root;
  const bool exact = mpz_root(root.get_mpz_t(), power.get_mpz_t(), b.get_ui()) != 0;
  if (!exact) root += 1;
  return hardness_budget_for_k(m, root);
}

ReductionBundle reduce_odp(const Valuation& v, const Valuation& w, std::size_t k, Construction c,
                           std::size_t cap) {
  PreprocessedPair pair = preprocess_trivial_items(v, w);
  SADPInstance inst = build(c, pair.v, pair.w, k, cap);
  ReductionReport report = reduction_report(inst, cap);
  ReductionBundle out{std::move(pair), std::move(inst), std::move(report), {}, {}};
  if (c == Construction::kItemTruncation) {
    out.witness = witness_for_IT(out.pair.v, out.pair.w, k, cap);
    out.compatibility = check_C_compatibility(out.instance, *out.witness, cap);
  }
  return out;
}

}  // namespace mdd
