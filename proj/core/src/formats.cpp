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

#include "mdd/formats.hpp"

#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "mdd/transforms.hpp"

namespace mdd {

using json = nlohmann::json;

namespace {

const char* kind_label(FormatErrorKind k) {
  switch (k) {
    case FormatErrorKind::kParse: return "parse";
    case FormatErrorKind::kSchema: return "schema";
    case FormatErrorKind::kSemantic: return "semantic";
  }
  return "format";
}

}  // namespace

FormatError::FormatError(FormatErrorKind kind, std::string path, const std::string& message)
    : std::runtime_error(std::string(kind_label(kind)) + " error at " +
                         (path.empty() ? std::string("/") : path) + ": " + message),
      kind_(kind),
      path_(std::move(path)) {}

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
  throw FormatError(FormatErrorKind::kSchema, path, message);
}

[[noreturn]] void semantic_fail(const std::string& path, const std::string& message) {
  throw FormatError(FormatErrorKind::kSemantic, path, message);
}

std::string at(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string at(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& field(const json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_fail(at(path, key), "missing field");
  return *it;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  return j;
}

Value get_value(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema_fail(path, "integer out of range");
  }
  return j.get<Value>();
}

Value get_natural(const json& j, const std::string& path) {
  const Value v = get_value(j, path);
  if (v < 0) semantic_fail(path, "expected a non-negative integer, got " + std::to_string(v));
  return v;
}

std::size_t get_size(const json& j, const std::string& path) {
  return static_cast<std::size_t>(get_natural(j, path));
}

std::uint64_t get_u64(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  return static_cast<std::uint64_t>(get_natural(j, path));
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<Value> get_naturals(const json& j, const std::string& path) {
  std::vector<Value> out;
  std::size_t i = 0;
  for (const auto& e : array(j, path)) out.push_back(get_natural(e, at(path, i++)));
  return out;
}

ItemSet get_set(const json& j, std::size_t ground, const std::string& path) {
  std::vector<Item> members;
  std::size_t i = 0;
  for (const auto& e : array(j, path)) {
    const std::size_t item = get_size(e, at(path, i++));
    if (item >= ground) {
      semantic_fail(at(path, i - 1), "item " + std::to_string(item) + " outside ground of " +
                                         std::to_string(ground));
    }
    members.push_back(static_cast<Item>(item));
  }
  try {
    return ItemSet(ground, std::move(members));
  } catch (const InvalidArgument& e) {
    semantic_fail(path, e.what());
  }
}

BigInt get_bigint(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                  : BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt out;
    if (out.set_str(j.get<std::string>(), 10) != 0) schema_fail(path, "expected a decimal integer");
    return out;
  }
  schema_fail(path, "expected an integer or a decimal string");
}

json bigint_json(const BigInt& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Rational get_fraction(const json& j, const std::string& path) {
  const BigInt num = get_bigint(field(j, "num", path), at(path, "num"));
  const BigInt den = get_bigint(field(j, "den", path), at(path, "den"));
  if (den == 0) semantic_fail(at(path, "den"), "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

json fraction_json(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return json{{"num", bigint_json(c.get_num())}, {"den", bigint_json(c.get_den())}};
}

json optional_fraction(const std::optional<Rational>& r) {
  return r ? fraction_json(*r) : json(nullptr);
}

json set_json(const ItemSet& s) { return json(s.members()); }

json sets_json(const std::vector<ItemSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

// Matroids.

json matroid_json(const Matroid& m) {
  namespace mk = matroid_kind;
  return std::visit(
      [&](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        json out{{"ground_size", m.ground_size()}};
        if constexpr (std::is_same_v<K, mk::Explicit>) {
          out["type"] = "explicit";
          json sets = json::array();
          std::vector<ItemSet> listed;
          for (Mask s : *k.independent) listed.push_back(ItemSet::from_mask(m.ground_size(), s));
          std::sort(listed.begin(), listed.end());
          for (const auto& s : listed) sets.push_back(set_json(s));
          out["independent"] = sets;
        } else if constexpr (std::is_same_v<K, mk::Uniform>) {
          out["type"] = "uniform";
          out["rank"] = k.rank;
        } else if constexpr (std::is_same_v<K, mk::Partition>) {
          out["type"] = "partition";
          out["blocks"] = k.blocks;
          out["caps"] = k.caps;
        } else {
          out["type"] = "truncated";
          out["y"] = k.y;
          out["inner"] = matroid_json(*k.inner);
        }
        return out;
      },
      m.kind());
}

Matroid matroid_from(const json& j, const std::string& path, std::size_t cap) {
  const std::string type = get_string(field(j, "type", path), at(path, "type"));
  const std::size_t m = get_size(field(j, "ground_size", path), at(path, "ground_size"));
  try {
    if (type == "explicit") {
      std::vector<ItemSet> sets;
      const std::string p = at(path, "independent");
      std::size_t i = 0;
      for (const auto& e : array(field(j, "independent", path), p)) {
        sets.push_back(get_set(e, m, at(p, i++)));
      }
      Matroid out = Matroid::explicit_independent(m, sets);
      if (m <= cap) {
        const AxiomReport r = verify_axioms(out, cap);
        if (!r.ok) {
          semantic_fail(p, "matroid axioms fail (" + to_string(r.first) + ", " +
                               to_string(r.second) + ")");
        }
      }
      return out;
    }
    if (type == "uniform") {
      return Matroid::uniform(m, get_size(field(j, "rank", path), at(path, "rank")));
    }
    if (type == "partition") {
      std::vector<std::vector<Item>> blocks;
      const std::string p = at(path, "blocks");
      std::size_t b = 0;
      for (const auto& block : array(field(j, "blocks", path), p)) {
        blocks.push_back({});
        for (Item i : get_set(block, m, at(p, b++))) blocks.back().push_back(i);
      }
      std::vector<std::size_t> caps;
      for (Value c : get_naturals(field(j, "caps", path), at(path, "caps"))) {
        caps.push_back(static_cast<std::size_t>(c));
      }
      return Matroid::partition(m, std::move(blocks), std::move(caps));
    }
    if (type == "truncated") {
      Matroid inner = matroid_from(field(j, "inner", path), at(path, "inner"), cap);
      if (inner.ground_size() != m) semantic_fail(at(path, "inner"), "inner ground size differs");
      return Matroid::truncated(get_size(field(j, "y", path), at(path, "y")), std::move(inner));
    }
  } catch (const InvalidArgument& e) {
    semantic_fail(path, e.what());
  }
  schema_fail(at(path, "type"), "unknown matroid type '" + type + "'");
}

// Valuations.

json valuation_json(const Valuation& v);

json cnf_json(const Cnf& cnf) {
  return json{{"num_vars", cnf.num_vars}, {"clauses", cnf.clauses}};
}

json valuation_json(const Valuation& v) {
  namespace vk = valuation_kind;
  const std::size_t m = v.ground_size();
  return std::visit(
      [&](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        json out{{"type", v.kind_name()}};
        if constexpr (std::is_same_v<K, vk::ExplicitTable>) {
          out["ground_size"] = m;
          out["values"] = *k.values;
        } else if constexpr (std::is_same_v<K, vk::Additive>) {
          out["weights"] = k.weights;
        } else if constexpr (std::is_same_v<K, vk::CDemand>) {
          out["capacity"] = k.capacity;
          out["weights"] = k.weights;
        } else if constexpr (std::is_same_v<K, vk::Oxs>) {
          out["ground_size"] = m;
          out["right_size"] = k.right_size;
          json rows = json::array();
          for (std::size_t r = 0; r < m; ++r) {
            rows.push_back(std::vector<Value>(k.weights.begin() + r * k.right_size,
                                              k.weights.begin() + (r + 1) * k.right_size));
          }
          out["weights"] = rows;
        } else if constexpr (std::is_same_v<K, vk::MatroidBased>) {
          out["matroid"] = matroid_json(k.weighted->matroid);
          out["weights"] = k.weighted->weights;
        } else if constexpr (std::is_same_v<K, vk::SatPerturbed>) {
          out["base"] = valuation_json(*k.base);
          out["cnf"] = cnf_json(k.cnf);
        } else if constexpr (std::is_same_v<K, vk::Perturbed>) {
          out["base"] = valuation_json(*k.base);
          out["at"] = set_json(k.at);
        } else if constexpr (std::is_same_v<K, vk::Scaled>) {
          out["factor"] = k.factor;
          out["inner"] = valuation_json(*k.inner);
        } else if constexpr (std::is_same_v<K, vk::DisjointUnion>) {
          json parts = json::array();
          for (const auto& p : k.parts) parts.push_back(valuation_json(p));
          out["parts"] = parts;
        } else if constexpr (std::is_same_v<K, vk::ItemTruncated>) {
          out["y"] = k.y;
          out["inner"] = valuation_json(*k.inner);
        } else if constexpr (std::is_same_v<K, vk::ValueTruncated>) {
          out["x"] = k.x;
          out["inner"] = valuation_json(*k.inner);
        } else {
          out["kept"] = k.kept;
          out["inner"] = valuation_json(*k.inner);
        }
        return out;
      },
      v.kind());
}

Cnf cnf_from(const json& j, const std::string& path) {
  Cnf cnf;
  cnf.num_vars = get_size(field(j, "num_vars", path), at(path, "num_vars"));
  const std::string p = at(path, "clauses");
  std::size_t c = 0;
  for (const auto& clause : array(field(j, "clauses", path), p)) {
    const std::string cp = at(p, c++);
    std::vector<int> lits;
    std::size_t l = 0;
    for (const auto& lit : array(clause, cp)) {
      const Value x = get_value(lit, at(cp, l++));
      if (x == 0 || static_cast<std::size_t>(x < 0 ? -x : x) > cnf.num_vars) {
        semantic_fail(at(cp, l - 1), "literal " + std::to_string(x) + " outside 1.." +
                                         std::to_string(cnf.num_vars));
      }
      lits.push_back(static_cast<int>(x));
    }
    cnf.clauses.push_back(std::move(lits));
  }
  return cnf;
}

Valuation valuation_from(const json& j, const std::string& path, std::size_t cap) {
  const std::string type = get_string(field(j, "type", path), at(path, "type"));
  auto inner = [&](const char* key) { return valuation_from(field(j, key, path), at(path, key), cap); };
  try {
    if (type == "explicit_table") {
      const std::size_t m = get_size(field(j, "ground_size", path), at(path, "ground_size"));
      if (m >= kMaxMaskGround) semantic_fail(at(path, "ground_size"), "ground too large for a table");
      auto values = get_naturals(field(j, "values", path), at(path, "values"));
      if (values.size() != (std::size_t{1} << m)) {
        semantic_fail(at(path, "values"), "missing entry: expected " +
                                              std::to_string(std::size_t{1} << m) + " values, got " +
                                              std::to_string(values.size()));
      }
      if (values[0] != 0) semantic_fail(at(path, "values/0"), "not normalized");
      Valuation v = Valuation::explicit_table(m, std::move(values));
      if (m <= cap) {
        const PropertyReport r = check_properties(v, cap);
        if (!r.monotone) {
          semantic_fail(at(path, "values"),
                        "not monotone: v" + to_string(r.monotone_violation->smaller) + " > v" +
                            to_string(r.monotone_violation->larger));
        }
      }
      return v;
    }
    if (type == "additive") {
      return Valuation::additive(get_naturals(field(j, "weights", path), at(path, "weights")));
    }
    if (type == "c_demand") {
      return Valuation::c_demand(get_size(field(j, "capacity", path), at(path, "capacity")),
                                 get_naturals(field(j, "weights", path), at(path, "weights")));
    }
    if (type == "oxs") {
      const std::size_t m = get_size(field(j, "ground_size", path), at(path, "ground_size"));
      const std::size_t r = get_size(field(j, "right_size", path), at(path, "right_size"));
      const std::string p = at(path, "weights");
      const json& rows = array(field(j, "weights", path), p);
      if (rows.size() != m) semantic_fail(p, "expected one weight row per item");
      std::vector<Value> grid;
      for (std::size_t i = 0; i < m; ++i) {
        auto row = get_naturals(rows[i], at(p, i));
        if (row.size() != r) semantic_fail(at(p, i), "expected " + std::to_string(r) + " weights");
        grid.insert(grid.end(), row.begin(), row.end());
      }
      return Valuation::oxs(m, r, std::move(grid));
    }
    if (type == "matroid_based") {
      Matroid matroid = matroid_from(field(j, "matroid", path), at(path, "matroid"), cap);
      return Valuation::matroid_based(WeightedMatroid(
          std::move(matroid), get_naturals(field(j, "weights", path), at(path, "weights"))));
    }
    if (type == "sat_perturbed") {
      return Valuation::sat_perturbed(inner("base"), cnf_from(field(j, "cnf", path), at(path, "cnf")));
    }
    if (type == "perturbed") {
      Valuation base = inner("base");
      ItemSet s = get_set(field(j, "at", path), base.ground_size(), at(path, "at"));
      return Valuation::perturbed(std::move(base), std::move(s));
    }
    if (type == "scaled") {
      return Valuation::scaled(get_value(field(j, "factor", path), at(path, "factor")), inner("inner"));
    }
    if (type == "disjoint_union") {
      std::vector<Valuation> parts;
      const std::string p = at(path, "parts");
      std::size_t i = 0;
      for (const auto& e : array(field(j, "parts", path), p)) {
        parts.push_back(valuation_from(e, at(p, i++), cap));
      }
      return Valuation::disjoint_union(std::move(parts));
    }
    if (type == "item_truncated") {
      return Valuation::item_truncated(get_size(field(j, "y", path), at(path, "y")), inner("inner"),
                                       cap);
    }
    if (type == "value_truncated") {
      return Valuation::value_truncated(get_natural(field(j, "x", path), at(path, "x")),
                                        inner("inner"));
    }
    if (type == "restricted") {
      std::vector<Item> kept;
      for (Value i : get_naturals(field(j, "kept", path), at(path, "kept"))) {
        kept.push_back(static_cast<Item>(i));
      }
      return Valuation::restricted(inner("inner"), std::move(kept));
    }
  } catch (const InvalidArgument& e) {
    semantic_fail(path, e.what());
  }
  schema_fail(at(path, "type"), "unknown valuation type '" + type + "'");
}

// Other payloads.

json distribution_json(const TypeDistribution& d) {
  json types = json::array();
  for (const auto& e : d.entries()) {
    types.push_back(json{{"valuation", valuation_json(e.valuation)},
                         {"probability", fraction_json(e.probability)}});
  }
  return json{{"ground_size", d.ground_size()}, {"types", types}};
}

TypeDistribution distribution_from(const json& j, const std::string& path, std::size_t cap) {
  const std::string p = at(path, "types");
  std::vector<TypeEntry> entries;
  Rational total;
  std::size_t i = 0;
  for (const auto& e : array(field(j, "types", path), p)) {
    const std::string ep = at(p, i++);
    Valuation v = valuation_from(field(e, "valuation", ep), at(ep, "valuation"), cap);
    Rational prob = get_fraction(field(e, "probability", ep), at(ep, "probability"));
    if (sgn(prob) <= 0) semantic_fail(at(ep, "probability"), "probability must be positive");
    if (!entries.empty() && v.ground_size() != entries.front().valuation.ground_size()) {
      semantic_fail(at(ep, "valuation"), "ground size differs from the first type");
    }
    total += prob;
    entries.push_back({std::move(v), std::move(prob)});
  }
  if (entries.empty()) semantic_fail(p, "distribution has no support");
  if (total != 1) semantic_fail(p, "probabilities sum to " + to_string(total));
  if (j.contains("ground_size") &&
      get_size(j["ground_size"], at(path, "ground_size")) != entries.front().valuation.ground_size()) {
    semantic_fail(at(path, "ground_size"), "does not match the valuations");
  }
  return TypeDistribution(std::move(entries));
}

json sadp_json(const SADPInstance& inst) {
  json out{{"k", inst.k()}, {"ground_size", inst.ground_size()}};
  if (const auto& p = inst.provenance()) {
    out["provenance"] = json{{"construction", to_string(p->construction)},
                             {"v", valuation_json(p->v)},
                             {"w", valuation_json(p->w)},
                             {"truncation", p->truncation}};
  } else {
    json vals = json::array();
    for (const auto& v : inst.valuations()) vals.push_back(valuation_json(v));
    out["valuations"] = vals;
  }
  return out;
}

SADPInstance sadp_from(const json& j, const std::string& path, std::size_t cap) {
  const std::size_t k = get_size(field(j, "k", path), at(path, "k"));
  if (k < 2) semantic_fail(at(path, "k"), "an SADP instance needs k >= 2");
  try {
    if (j.contains("provenance")) {
      const std::string p = at(path, "provenance");
      const json& pj = j["provenance"];
      Construction c;
      try {
        c = parse_construction(get_string(field(pj, "construction", p), at(p, "construction")));
      } catch (const InvalidArgument& e) {
        semantic_fail(at(p, "construction"), e.what());
      }
      Valuation v = valuation_from(field(pj, "v", p), at(p, "v"), cap);
      Valuation w = valuation_from(field(pj, "w", p), at(p, "w"), cap);
      if (v.ground_size() != w.ground_size()) semantic_fail(at(p, "w"), "v and w grounds differ");
      SADPInstance inst = build(c, v, w, k, cap);
      if (get_value(field(pj, "truncation", p), at(p, "truncation")) != inst.provenance()->truncation) {
        semantic_fail(at(p, "truncation"), "does not match the construction");
      }
      return inst;
    }
    std::vector<Valuation> vals;
    const std::string p = at(path, "valuations");
    std::size_t i = 0;
    for (const auto& e : array(field(j, "valuations", path), p)) {
      vals.push_back(valuation_from(e, at(p, i++), cap));
    }
    if (vals.size() != k) semantic_fail(p, "expected k valuations");
    return SADPInstance(std::move(vals));
  } catch (const InvalidArgument& e) {
    semantic_fail(path, e.what());
  }
}

json menu_json(const Menu& raw) {
  const Menu menu = canonical(raw);
  json entries = json::array();
  std::size_t ground = 0;
  for (const auto& e : menu.entries) {
    json lottery = json::array();
    for (const auto& l : e.lottery) {
      ground = l.set.ground_size();
      lottery.push_back(json{{"set", set_json(l.set)}, {"probability", fraction_json(l.probability)}});
    }
    entries.push_back(json{{"lottery", lottery}, {"price", fraction_json(e.price)}});
  }
  return json{{"ground_size", ground}, {"entries", entries}};
}

Menu menu_from(const json& j, const std::string& path) {
  const std::size_t m = get_size(field(j, "ground_size", path), at(path, "ground_size"));
  Menu menu;
  const std::string p = at(path, "entries");
  std::size_t i = 0;
  for (const auto& e : array(field(j, "entries", path), p)) {
    const std::string ep = at(p, i++);
    MenuEntry entry;
    entry.price = get_fraction(field(e, "price", ep), at(ep, "price"));
    if (sgn(entry.price) < 0) semantic_fail(at(ep, "price"), "negative price");
    const std::string lp = at(ep, "lottery");
    Rational total;
    std::size_t li = 0;
    for (const auto& l : array(field(e, "lottery", ep), lp)) {
      const std::string xp = at(lp, li++);
      Rational prob = get_fraction(field(l, "probability", xp), at(xp, "probability"));
      if (sgn(prob) < 0) semantic_fail(at(xp, "probability"), "negative probability");
      total += prob;
      entry.lottery.push_back({get_set(field(l, "set", xp), m, at(xp, "set")), std::move(prob)});
    }
    if (total != 1) semantic_fail(lp, "lottery probabilities sum to " + to_string(total));
    menu.entries.push_back(std::move(entry));
  }
  return canonical(std::move(menu));
}

json witness_json(const CompatibilityWitness& w) {
  json q = json::array();
  for (const auto& x : w.multipliers) q.push_back(bigint_json(x));
  const std::size_t ground = w.allocations.empty() ? 0 : w.allocations.front().ground_size();
  return json{{"allocations", sets_json(w.allocations)},
              {"multipliers", q},
              {"c", w.c},
              {"c1", w.c1},
              {"ground_size", ground}};
}

CompatibilityWitness witness_from(const json& j, const std::string& path) {
  CompatibilityWitness w;
  const std::size_t m = get_size(field(j, "ground_size", path), at(path, "ground_size"));
  w.c = get_u64(field(j, "c", path), at(path, "c"));
  w.c1 = get_natural(field(j, "c1", path), at(path, "c1"));
  const std::string ap = at(path, "allocations");
  std::size_t i = 0;
  for (const auto& a : array(field(j, "allocations", path), ap)) {
    w.allocations.push_back(get_set(a, m, at(ap, i++)));
  }
  const std::string qp = at(path, "multipliers");
  i = 0;
  for (const auto& q : array(field(j, "multipliers", path), qp)) {
    w.multipliers.push_back(get_bigint(q, at(qp, i++)));
  }
  if (w.multipliers.size() != w.allocations.size()) {
    semantic_fail(qp, "expected one multiplier per allocation");
  }
  return w;
}

json transcript_json(const GameTranscript& t) {
  return json{{"game", t.game},
              {"algorithm", t.algorithm},
              {"m", t.m},
              {"x", t.x},
              {"budget", t.budget},
              {"seed", t.seed},
              {"trials", t.trials},
              {"successes", t.successes},
              {"voided", t.voided},
              {"query_counts", t.query_counts},
              {"hidden_ranks", t.hidden_ranks},
              {"bound", optional_fraction(t.bound)}};
}

GameTranscript transcript_from(const json& j, const std::string& path) {
  GameTranscript t;
  t.game = get_string(field(j, "game", path), at(path, "game"));
  if (t.game != "value" && t.game != "demand") semantic_fail(at(path, "game"), "expected value or demand");
  t.algorithm = get_string(field(j, "algorithm", path), at(path, "algorithm"));
  t.m = get_size(field(j, "m", path), at(path, "m"));
  t.x = get_u64(field(j, "x", path), at(path, "x"));
  t.budget = get_size(field(j, "budget", path), at(path, "budget"));
  t.seed = get_u64(field(j, "seed", path), at(path, "seed"));
  t.trials = get_u64(field(j, "trials", path), at(path, "trials"));
  t.successes = get_u64(field(j, "successes", path), at(path, "successes"));
  t.voided = get_u64(field(j, "voided", path), at(path, "voided"));
  if (t.successes + t.voided > t.trials) semantic_fail(at(path, "successes"), "exceeds trials");
  for (Value q : get_naturals(field(j, "query_counts", path), at(path, "query_counts"))) {
    if (static_cast<std::size_t>(q) > t.budget) {
      semantic_fail(at(path, "query_counts"), "a query count exceeds the budget");
    }
    t.query_counts.push_back(static_cast<std::uint32_t>(q));
  }
  const std::string hp = at(path, "hidden_ranks");
  std::size_t i = 0;
  for (const auto& h : array(field(j, "hidden_ranks", path), hp)) {
    t.hidden_ranks.push_back(get_u64(h, at(hp, i++)));
  }
  const json& b = field(j, "bound", path);
  if (!b.is_null()) t.bound = get_fraction(b, at(path, "bound"));
  return t;
}

json payload_json(const Payload& p) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Valuation>) {
          return valuation_json(x);
        } else if constexpr (std::is_same_v<T, TypeDistribution>) {
          return distribution_json(x);
        } else if constexpr (std::is_same_v<T, SADPInstance>) {
          return sadp_json(x);
        } else if constexpr (std::is_same_v<T, Menu>) {
          return menu_json(x);
        } else if constexpr (std::is_same_v<T, CompatibilityWitness>) {
          return witness_json(x);
        } else if constexpr (std::is_same_v<T, GameTranscript>) {
          return transcript_json(x);
        } else if constexpr (std::is_same_v<T, OdpInstance>) {
          return json{{"v", valuation_json(x.v)}, {"w", valuation_json(x.w)}};
        } else {
          return json{{"name", x.name}, {"body", json::parse(x.body)}};
        }
      },
      p);
}

Report make_report(std::string name, const json& body) { return Report{std::move(name), body.dump()}; }

}  // namespace

std::string kind_of(const Document& doc) {
  static const char* const kNames[] = {"valuation", "distribution", "sadp-instance", "menu",
                                       "witness",   "transcript",   "odp-instance",  "report"};
  return kNames[doc.payload.index()];
}

std::string save_document(const Document& doc) {
  const json out{{"schema_version", kSchemaVersion},
                 {"kind", kind_of(doc)},
                 {"payload", payload_json(doc.payload)}};
  return out.dump(2) + "\n";
}

Document load_document(std::string_view bytes, std::size_t cap) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw FormatError(FormatErrorKind::kParse, "", e.what());
  }
  const Value version = get_value(field(j, "schema_version", ""), "/schema_version");
  if (version != kSchemaVersion) {
    schema_fail("/schema_version", "unsupported version " + std::to_string(version));
  }
  const std::string kind = get_string(field(j, "kind", ""), "/kind");
  const json& p = field(j, "payload", "");
  const std::string path = "/payload";
  if (kind == "valuation") return {valuation_from(p, path, cap)};
  if (kind == "distribution") return {distribution_from(p, path, cap)};
  if (kind == "sadp-instance") return {sadp_from(p, path, cap)};
  if (kind == "menu") return {menu_from(p, path)};
  if (kind == "witness") return {witness_from(p, path)};
  if (kind == "transcript") return {transcript_from(p, path)};
  if (kind == "odp-instance") {
    Valuation v = valuation_from(field(p, "v", path), "/payload/v", cap);
    Valuation w = valuation_from(field(p, "w", path), "/payload/w", cap);
    if (v.ground_size() != w.ground_size()) semantic_fail("/payload/w", "v and w grounds differ");
    return {OdpInstance{std::move(v), std::move(w)}};
  }
  if (kind == "report") {
    const json& body = field(p, "body", path);
    if (!body.is_object()) schema_fail("/payload/body", "expected an object");
    return {Report{get_string(field(p, "name", path), "/payload/name"), body.dump()}};
  }
  schema_fail("/kind", "unknown document kind '" + kind + "'");
}

Document read_document(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(FormatErrorKind::kParse, "", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document(buf.str(), cap);
}

void write_atomically(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Report report_of(const OdpResult& r, const Valuation& v, const Valuation& w) {
  return make_report("odp", json{{"set", set_json(r.set)},
                                 {"value", r.value},
                                 {"v_value", value(v, r.set)},
                                 {"w_value", value(w, r.set)}});
}

namespace {

json reduction_json(const ReductionReport& r) {
  return json{{"gaps", r.gaps},
              {"gap_argmax", sets_json(r.gap_argmax)},
              {"last_full", r.last_full},
              {"d", optional_fraction(r.d)},
              {"degenerate", !r.d.has_value()},
              {"bound", optional_fraction(r.bound)},
              {"within_bound", r.within_bound},
              {"compatibility_c", r.compatibility_c ? json(*r.compatibility_c) : json(nullptr)}};
}

json compat_json(const CCompatibilityReport& r) {
  const auto& c = r.compatibility;
  json violated = c.violated ? json{c.violated->first, c.violated->second} : json(nullptr);
  return json{{"ok", r.ok},
              {"multipliers_ok", r.multipliers_ok},
              {"gap_failure", r.gap_failure ? json(*r.gap_failure) : json(nullptr)},
              {"compatibility", json{{"ok", c.ok},
                                     {"violated", violated},
                                     {"attained", fraction_json(c.attained)},
                                     {"maximum", fraction_json(c.maximum)}}}};
}

}  // namespace

Report report_of(const ReductionReport& r) { return make_report("reduction", reduction_json(r)); }

Report report_of(const ReductionBundle& b) {
  std::vector<Item> kept(b.pair.kept.begin(), b.pair.kept.end());
  return make_report(
      "reduction",
      json{{"report", reduction_json(b.report)},
           {"construction", to_string(b.instance.provenance()->construction)},
           {"k", b.instance.k()},
           {"kept", kept},
           {"removed_for_v", set_json(b.pair.removed_for_v)},
           {"removed_for_w", set_json(b.pair.removed_for_w)},
           {"compatibility", b.compatibility ? compat_json(*b.compatibility) : json(nullptr)}});
}

Report report_of(const Recovery& r) {
  return make_report("recovery", json{{"set", set_json(r.set)},
                                      {"achieved", r.achieved},
                                      {"index", r.index},
                                      {"refined", sets_json(r.refined)}});
}

Report report_of(const SadpEvaluation& e) {
  json ratios = json::array();
  for (const auto& r : e.ratios) ratios.push_back(optional_fraction(r));
  return make_report("sadp", json{{"numerators", e.numerators},
                                  {"gaps", e.gaps},
                                  {"ratios", ratios},
                                  {"best_index", e.best_index ? json(*e.best_index) : json(nullptr)},
                                  {"best_ratio", fraction_json(e.best_ratio)}});
}

Report report_of(const CCompatibilityReport& r) { return make_report("compatibility", compat_json(r)); }

Report report_of(const PropertyReport& r) {
  json mono = nullptr;
  if (r.monotone_violation) {
    mono = json{{"smaller", set_json(r.monotone_violation->smaller)},
                {"larger", set_json(r.monotone_violation->larger)}};
  }
  json sub = nullptr;
  if (r.submodular_violation) {
    sub = json{{"base", set_json(r.submodular_violation->base)},
               {"y", r.submodular_violation->y},
               {"z", r.submodular_violation->z}};
  }
  return make_report("class", json{{"normalized", r.normalized},
                                   {"empty_value", r.empty_value},
                                   {"monotone", r.monotone},
                                   {"monotone_violation", mono},
                                   {"trivial_items", r.trivial_items},
                                   {"submodular", r.submodular},
                                   {"submodular_violation", sub}});
}

Report report_of(const AxiomReport& r) {
  static const char* const kFailures[] = {"none", "empty_not_independent", "downward_closure",
                                          "augmentation"};
  return make_report("matroid-axioms", json{{"ok", r.ok},
                                            {"failure", kFailures[static_cast<int>(r.failure)]},
                                            {"first", set_json(r.first)},
                                            {"second", set_json(r.second)}});
}

Report report_of(const MenuResiduals& r) {
  return make_report("menu-residuals", json{{"max_ic_violation", fraction_json(r.max_ic_violation)},
                                            {"max_ir_violation", fraction_json(r.max_ir_violation)},
                                            {"revenue", fraction_json(r.revenue)},
                                            {"lotteries_valid", r.lotteries_valid}});
}

Report report_of(const MenuSolution& s) {
  return make_report("mdmdp", json{{"revenue", fraction_json(s.revenue)}, {"pivots", s.pivots}});
}

Report report_of(const TrivialBundle& b) {
  return make_report("trivial-bundle", json{{"revenue", fraction_json(b.revenue)},
                                            {"targeted_bound", fraction_json(b.targeted_bound)},
                                            {"target", b.target},
                                            {"price", b.price}});
}

Report report_of(const HardnessBudget& b) {
  return make_report("hardness-budget", json{{"k", bigint_json(b.k)},
                                             {"items", bigint_json(b.items)},
                                             {"support", bigint_json(b.support)},
                                             {"bound", fraction_json(b.bound)}});
}

Report quality_report(const Rational& alpha, const Rational& d, std::size_t k, const Rational& q) {
  return make_report("quality", json{{"alpha", fraction_json(alpha)},
                                     {"d", fraction_json(d)},
                                     {"k", k},
                                     {"quality", fraction_json(q)}});
}

}  // namespace mdd
