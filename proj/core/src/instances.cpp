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

#include "mdd/instances.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

namespace mdd {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (mpz_sizeinbase(r.get_mpz_t(), 2) > 64) {
    throw ArithmeticOverflow("C(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") exceeds 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::uint64_t subset_rank(std::size_t m, const ItemSet& s) {
  if (s.ground_size() != m) throw InvalidArgument("subset_rank: set over the wrong ground");
  const std::size_t k = s.size();
  std::uint64_t before = 0;
  std::size_t next = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const Item c = s.members()[j];
    for (std::size_t t = next; t < c; ++t) before += binomial(m - 1 - t, k - 1 - j);
    next = c + 1;
  }
  return before + 1;
}

ItemSet subset_unrank(std::size_t m, std::size_t size, std::uint64_t rank) {
  if (size > m) throw InvalidArgument("subset_unrank: size exceeds ground");
  const std::uint64_t total = binomial(m, size);
  if (rank < 1 || rank > total) {
    throw InvalidArgument("subset_unrank: index " + std::to_string(rank) + " outside [1, " +
                          std::to_string(total) + "]");
  }
  std::uint64_t remaining = rank - 1;
  std::vector<Item> out;
  std::size_t t = 0;
  for (std::size_t j = 0; j < size; ++j) {
    for (;; ++t) {
      const std::uint64_t block = binomial(m - 1 - t, size - 1 - j);
      if (remaining < block) break;
      remaining -= block;
    }
    out.push_back(static_cast<Item>(t));
    ++t;
  }
  return ItemSet(m, std::move(out));
}

namespace {

std::vector<Value> complete_graph(std::size_t m) { return std::vector<Value>(m * (m / 2), 1); }

void require_perturbing_set(const PerturbableFamily& family, const ItemSet& s) {
  if (s.ground_size() != family.m) throw InvalidArgument("perturbing set over the wrong ground");
  if (s.size() != family.m / 2) {
    throw InvalidArgument("perturbing set must have " + std::to_string(family.m / 2) +
                          " items, got " + std::to_string(s.size()));
  }
}

}  // namespace

PerturbableFamily boxs_family(std::size_t m) {
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgument("boxs family needs an even m >= 2, got " + std::to_string(m));
  }
  PerturbableFamily f{Valuation::oxs(m, m / 2, complete_graph(m)), m, binomial(m, m / 2),
                      static_cast<Value>(m / 2)};
  return f;
}

Valuation perturb(const PerturbableFamily& family, const ItemSet& s) {
  require_perturbing_set(family, s);
  const std::size_t right = family.m / 2;
  auto weights = complete_graph(family.m);
  for (Item i : s) weights[i * right] = 0;
  return Valuation::oxs(family.m, right, std::move(weights));
}

Valuation perturb_pointwise(const PerturbableFamily& family, const ItemSet& s) {
  require_perturbing_set(family, s);
  return Valuation::perturbed(family.base, s);
}

Valuation sat_perturbed_valuation(const PerturbableFamily& family, Cnf cnf) {
  return Valuation::sat_perturbed(family.base, std::move(cnf));
}

std::vector<ItemSet> satisfied_perturbing_sets(const PerturbableFamily& family, const Cnf& cnf) {
  std::vector<ItemSet> out;
  const std::uint64_t limit = std::min<std::uint64_t>(family.x, std::uint64_t{1} << cnf.num_vars);
  for (std::uint64_t r = 1; r <= limit; ++r) {
    if (cnf.satisfied_by(r - 1)) out.push_back(subset_unrank(family.m, family.m / 2, r));
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> clause;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == '%') break;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf") {
        throw InvalidArgument("dimacs: malformed header '" + line + "'");
      }
      header = true;
      continue;
    }
    if (!header) throw InvalidArgument("dimacs: clause before 'p cnf' header");
    long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > cnf.num_vars) {
        throw InvalidArgument("dimacs: literal " + std::to_string(lit) + " exceeds variable count");
      }
      clause.push_back(static_cast<int>(lit));
    }
    if (!ls.eof()) throw InvalidArgument("dimacs: unexpected token in '" + line + "'");
  }
  if (!header) throw InvalidArgument("dimacs: missing 'p cnf' header");
  if (!clause.empty()) cnf.clauses.push_back(std::move(clause));
  if (cnf.clauses.size() != declared_clauses) {
    throw InvalidArgument("dimacs: header declares " + std::to_string(declared_clauses) +
                          " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

Valuation appendix_counterexample() {
  std::vector<Value> table(16);
  for (Mask s = 1; s < 16; ++s) {
    switch (std::popcount(s)) {
      case 1: table[s] = 5; break;
      case 2: table[s] = s == 0b1100 ? 10 : 9; break;
      case 3: table[s] = s == 0b0111 ? 9 : 10; break;
      default: table[s] = 10; break;
    }
  }
  return Valuation::explicit_table(4, std::move(table));
}

}  // namespace mdd
