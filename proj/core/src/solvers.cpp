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

#include "mdd/solvers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mdd/simplex.hpp"

namespace mdd {

std::string to_string(Construction c) {
  return c == Construction::kItemTruncation ? "it" : "vt";
}

Construction parse_construction(std::string_view text) {
  if (text == "it") return Construction::kItemTruncation;
  if (text == "vt") return Construction::kValueTruncation;
  throw InvalidArgument("unknown construction '" + std::string(text) + "' (expected it or vt)");
}

SADPInstance::SADPInstance(std::vector<Valuation> valuations, std::optional<Provenance> provenance)
    : valuations_(std::move(valuations)), provenance_(std::move(provenance)) {
  if (valuations_.size() < 2) throw InvalidArgument("an SADP instance needs k >= 2 valuations");
  for (const auto& v : valuations_) {
    if (v.ground_size() != valuations_.front().ground_size()) {
      throw InvalidArgument("SADP valuations have different ground sizes");
    }
  }
}

OdpResult brute_force_odp(const Valuation& v, const Valuation& w, std::size_t cap) {
  const std::size_t m = v.ground_size();
  if (w.ground_size() != m) throw InvalidArgument("odp: valuations on different grounds");
  const auto tv = tabulate(v, cap);
  const auto tw = tabulate(w, cap);
  Mask best = 0;
  Value best_value = 0;
  for (Mask s : lexicographic_masks(m, cap)) {
    const Value diff = tv[s] - tw[s];
    if (diff > best_value) {
      best_value = diff;
      best = s;
    }
  }
  return {ItemSet::from_mask(m, best), best_value};
}

SadpGaps sadp_gaps(const SADPInstance& inst, std::size_t cap) {
  const std::size_t n = inst.ground_size();
  const auto order = lexicographic_masks(n, cap);
  std::vector<std::vector<Value>> tables;
  tables.reserve(inst.k());
  for (const auto& v : inst.valuations()) tables.push_back(tabulate(v, cap));
  SadpGaps out;
  for (std::size_t l = 0; l + 1 < inst.k(); ++l) {
    Mask best = 0;
    Value gap = 0;
    for (Mask s : order) {
      const Value diff = tables[l][s] - tables[l + 1][s];
      if (diff > gap) {
        gap = diff;
        best = s;
      }
    }
    out.gaps.push_back(gap);
    out.argmax.push_back(ItemSet::from_mask(n, best));
  }
  out.last_full = tables.back().back();
  return out;
}

SadpEvaluation sadp_eval(const SadpGaps& gaps, const SADPInstance& inst, const ItemSet& s) {
  if (s.ground_size() != inst.ground_size()) throw InvalidArgument("sadp_eval: wrong ground");
  SadpEvaluation out;
  out.gaps = gaps.gaps;
  std::vector<Value> vals;
  for (const auto& v : inst.valuations()) vals.push_back(value(v, s));
  bool have_best = false;
  for (std::size_t l = 0; l + 1 < inst.k(); ++l) {
    const Value num = vals[l] - vals[l + 1];
    out.numerators.push_back(num);
    std::optional<Rational> ratio;
    if (gaps.gaps[l] > 0) {
      ratio = Rational(num, gaps.gaps[l]);
      ratio->canonicalize();
    } else if (num == 0) {
      ratio = Rational(1);
    }
    if (ratio && (!have_best || *ratio > out.best_ratio)) {
      have_best = true;
      out.best_ratio = *ratio;
      out.best_index = l + 1;
    }
    out.ratios.push_back(std::move(ratio));
  }
  return out;
}

SadpEvaluation sadp_eval(const SADPInstance& inst, const ItemSet& s, std::size_t cap) {
  return sadp_eval(sadp_gaps(inst, cap), inst, s);
}

Menu canonical(Menu menu) {
  for (auto& e : menu.entries) {
    std::map<ItemSet, Rational> merged;
    for (auto& l : e.lottery) merged[l.set] += l.probability;
    e.lottery.clear();
    for (auto& [set, p] : merged) {
      if (sgn(p) != 0) e.lottery.push_back({set, p});
    }
  }
  return menu;
}

MenuSolution lp_optimal_mdmdp(const TypeDistribution& d, std::size_t cap) {
  const std::size_t m = d.ground_size();
  require_within_cap("mdmdp lottery support", m, cap);
  const std::size_t k = d.size();
  const std::size_t sets = (std::size_t{1} << m) - 1;  // non-empty sets
  const std::size_t price0 = k * sets;
  auto pi = [&](std::size_t t, Mask s) { return t * sets + (s - 1); };

  std::vector<std::vector<Value>> table;
  for (const auto& e : d.entries()) table.push_back(tabulate(e.valuation, cap));

  std::vector<LpRow> rows;
  std::vector<Rational> rhs;
  for (std::size_t t = 0; t < k; ++t) {
    LpRow row;
    for (Mask s = 1; s <= sets; ++s) row.emplace_back(pi(t, s), Rational(1));
    rows.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  auto own_utility = [&](std::size_t t, LpRow& row) {
    for (Mask s = 1; s <= sets; ++s) {
      if (table[t][s] != 0) row.emplace_back(pi(t, s), Rational(-table[t][s]));
    }
    row.emplace_back(price0 + t, Rational(1));
  };
  for (std::size_t t = 0; t < k; ++t) {
    LpRow row;
    own_utility(t, row);
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t u = 0; u < k; ++u) {
      if (t == u) continue;
      LpRow row;
      own_utility(t, row);
      for (Mask s = 1; s <= sets; ++s) {
        if (table[t][s] != 0) row.emplace_back(pi(u, s), Rational(table[t][s]));
      }
      row.emplace_back(price0 + u, Rational(-1));
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  std::vector<Rational> c(price0 + k);
  for (std::size_t t = 0; t < k; ++t) c[price0 + t] = d.entries()[t].probability;

  const LpResult lp = maximize(price0 + k, rows, rhs, c);
  if (lp.status != LpStatus::kOptimal) {
    throw std::logic_error("mdmdp linear program reported unbounded; the null menu bounds it");
  }

  MenuSolution out;
  out.revenue = lp.objective;
  out.pivots = lp.pivots;
  for (std::size_t t = 0; t < k; ++t) {
    MenuEntry e;
    Rational rest(1);
    for (Mask s = 1; s <= sets; ++s) {
      const Rational& p = lp.x[pi(t, s)];
      if (sgn(p) == 0) continue;
      e.lottery.push_back({ItemSet::from_mask(m, s), p});
      rest -= p;
    }
    if (sgn(rest) != 0) e.lottery.insert(e.lottery.begin(), {ItemSet(m), rest});
    e.price = lp.x[price0 + t];
    out.menu.entries.push_back(std::move(e));
  }
  out.menu = canonical(std::move(out.menu));
  return out;
}

TrivialBundle trivial_bundle_menu(const TypeDistribution& d) {
  const std::size_t m = d.ground_size();
  const ItemSet full = ItemSet::full(m);
  TrivialBundle out;
  bool first = true;
  for (std::size_t t = 0; t < d.size(); ++t) {
    const Value f = value(d.entries()[t].valuation, full);
    const Rational target = d.entries()[t].probability * f;
    if (first || target > out.targeted_bound) {
      first = false;
      out.targeted_bound = target;
      out.target = t;
      out.price = f;
    }
  }
  for (const auto& e : d.entries()) {
    MenuEntry entry;
    if (value(e.valuation, full) >= out.price) {
      entry.lottery.push_back({full, Rational(1)});
      entry.price = out.price;
      out.revenue += e.probability * out.price;
    } else {
      entry.lottery.push_back({ItemSet(m), Rational(1)});
    }
    out.menu.entries.push_back(std::move(entry));
  }
  return out;
}

MenuResiduals verify_menu(const TypeDistribution& d, const Menu& menu) {
  if (menu.entries.size() != d.size()) {
    throw InvalidArgument("menu has " + std::to_string(menu.entries.size()) + " entries for " +
                          std::to_string(d.size()) + " types");
  }
  const std::size_t k = d.size();
  MenuResiduals out;
  for (const auto& e : menu.entries) {
    Rational sum;
    for (const auto& l : e.lottery) {
      if (sgn(l.probability) < 0 || l.set.ground_size() != d.ground_size()) {
        out.lotteries_valid = false;
      }
      sum += l.probability;
    }
    if (sum != 1 || sgn(e.price) < 0) out.lotteries_valid = false;
  }
  auto utility = [&](std::size_t t, const MenuEntry& e) {
    Rational u = -e.price;
    for (const auto& l : e.lottery) u += l.probability * value(d.entries()[t].valuation, l.set);
    return u;
  };
  for (std::size_t t = 0; t < k; ++t) {
    const Rational own = utility(t, menu.entries[t]);
    if (-own > out.max_ir_violation) out.max_ir_violation = -own;
    for (std::size_t u = 0; u < k; ++u) {
      if (u == t) continue;
      const Rational gain = utility(t, menu.entries[u]) - own;
      if (gain > out.max_ic_violation) out.max_ic_violation = gain;
    }
    out.revenue += d.entries()[t].probability * menu.entries[t].price;
  }
  return out;
}

ApproxReport approx_report(const Rational& achieved, const Rational& optimum, ItemSet witness) {
  ApproxReport out{achieved, optimum, Rational(1), std::move(witness)};
  if (sgn(optimum) != 0) out.ratio = achieved / optimum;
  return out;
}

}  // namespace mdd
