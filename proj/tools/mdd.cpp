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

// mdd: command-line front end. Every subcommand reads and writes JSON
// documents; exit 0 on success, 1 on a failed verification, 2 on bad input.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mdd/formats.hpp"
#include "mdd/games.hpp"
#include "mdd/instances.hpp"
#include "mdd/reduction.hpp"
#include "mdd/solvers.hpp"
#include "mdd/transforms.hpp"

namespace {

using namespace mdd;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  std::size_t cap = kDefaultEnumCap;
  std::string output;
};

Globals g;

void emit(const Document& doc, const std::string& path) {
  const std::string bytes = save_document(doc);
  if (path.empty() || path == "-") {
    std::cout << bytes;
  } else {
    write_atomically(path, bytes);
  }
}

void emit(const Document& doc) { emit(doc, g.output); }

Document load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return load_document(buf.str(), g.cap);
  }
  return read_document(path, g.cap);
}

template <typename T>
T load_as(const std::string& path, const char* expected) {
  Document doc = load(path);
  if (auto* p = std::get_if<T>(&doc.payload)) return std::move(*p);
  throw FormatError(FormatErrorKind::kSchema, "/kind",
                    "expected a " + std::string(expected) + " document, got " + kind_of(doc));
}

ItemSet parse_items(const std::string& text, std::size_t ground) {
  std::vector<Item> items;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const unsigned long i = std::stoul(tok, &used);
    if (used != tok.size()) throw InvalidArgument("bad item '" + tok + "'");
    items.push_back(static_cast<Item>(i));
  }
  return ItemSet(ground, std::move(items));
}

std::size_t cap_from_env() {
  if (const char* env = std::getenv("MDD_ENUM_CAP")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("MDD_ENUM_CAP is not a number: ") + env);
    }
  }
  return kDefaultEnumCap;
}

std::size_t lp_cap() { return std::min(g.cap, kDefaultLpCap) == g.cap ? g.cap : kDefaultLpCap; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale workbench for revenue-maximization reductions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t cap_flag = 0;
  app.add_option("--cap", cap_flag, "Enumeration cap on 2^m loops (env MDD_ENUM_CAP)");
  app.add_option("-o,--output", g.output, "Output file (default stdout)");
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances")->require_subcommand(1);
  std::size_t m = 0;
  std::string perturb_at, cnf_path, v_path, w_path;
  auto* gen_boxs = gen->add_subcommand("boxs", "Binary OXS base valuation or one perturbation");
  gen_boxs->add_option("--m", m, "Item count (even)")->required();
  gen_boxs->add_option("--perturb", perturb_at, "Perturbing set, e.g. 0,1");
  gen_boxs->callback([&] {
    action = [&] {
      const PerturbableFamily fam = boxs_family(m);
      if (perturb_at.empty()) {
        emit({fam.base});
      } else {
        emit({perturb(fam, parse_items(perturb_at, m))});
      }
      return kOk;
    };
  });
  auto* gen_sat = gen->add_subcommand("sat", "SAT-perturbed binary OXS valuation");
  gen_sat->add_option("--m", m, "Item count (even)")->required();
  gen_sat->add_option("--cnf", cnf_path, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  gen_sat->callback([&] {
    action = [&] {
      std::ifstream in(cnf_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      emit({sat_perturbed_valuation(boxs_family(m), parse_dimacs(buf.str()))});
      return kOk;
    };
  });
  auto* gen_appc = gen->add_subcommand("appendix-c", "Four-item submodular counterexample table");
  gen_appc->callback([&] {
    action = [&] {
      emit({appendix_counterexample()});
      return kOk;
    };
  });
  auto* gen_pair = gen->add_subcommand("pair", "ODP instance (v, w)");
  gen_pair->add_option("--m", m, "Binary OXS base as v, its perturbation as w");
  gen_pair->add_option("--perturb", perturb_at, "Perturbing set for w");
  gen_pair->add_option("--v", v_path, "Valuation document for v");
  gen_pair->add_option("--w", w_path, "Valuation document for w");
  gen_pair->callback([&] {
    action = [&] {
      if (!v_path.empty() || !w_path.empty()) {
        if (v_path.empty() || w_path.empty()) throw InvalidArgument("--v and --w go together");
        emit({OdpInstance{load_as<Valuation>(v_path, "valuation"),
                          load_as<Valuation>(w_path, "valuation")}});
        return kOk;
      }
      if (m == 0 || perturb_at.empty()) throw InvalidArgument("need --m and --perturb, or --v and --w");
      const PerturbableFamily fam = boxs_family(m);
      emit({OdpInstance{fam.base, perturb(fam, parse_items(perturb_at, m))}});
      return kOk;
    };
  });

  // reduce
  auto* red = app.add_subcommand("reduce", "Build the SADP instance of an ODP pair")
                  ->require_subcommand(1);
  std::size_t k = 0;
  std::string input, witness_out, instance_out;
  for (const char* name : {"it", "vt"}) {
    auto* sub = red->add_subcommand(name, std::string(name) == "it" ? "Item truncation at m"
                                                                     : "Value truncation at 2k v([m])");
    sub->add_option("--k", k, "Valuation count")->required();
    sub->add_option("--input", input, "odp-instance document")->required();
    sub->add_option("--instance-out", instance_out, "Write the SADP instance here");
    sub->add_option("--witness-out", witness_out, "Write the compatibility witness here (it)");
    sub->callback([&, name] {
      action = [&, name] {
        const auto pair = load_as<OdpInstance>(input, "odp-instance");
        const ReductionBundle b = reduce_odp(pair.v, pair.w, k, parse_construction(name), g.cap);
        if (!instance_out.empty()) emit({b.instance}, instance_out);
        if (!witness_out.empty() && b.witness) emit({*b.witness}, witness_out);
        emit({report_of(b)});
        return kOk;
      };
    });
  }

  // recover
  auto* rec = app.add_subcommand("recover", "Map an SADP solution back to an ODP solution")
                  ->require_subcommand(1);
  std::string solution;
  for (const char* name : {"it", "vt"}) {
    auto* sub = rec->add_subcommand(name, "Recover through this construction");
    sub->add_option("--instance", input, "sadp-instance document")->required();
    sub->add_option("--solution", solution, "SADP solution, e.g. 0,3")->required();
    sub->callback([&, name] {
      action = [&, name] {
        const auto inst = load_as<SADPInstance>(input, "sadp-instance");
        const ItemSet s = parse_items(solution, inst.ground_size());
        const Recovery r = std::string(name) == "it" ? recover_from_IT(s, inst)
                                                     : recover_from_VT(s, inst);
        emit({report_of(r)});
        return kOk;
      };
    });
  }

  // verify
  auto* ver = app.add_subcommand("verify", "Check certificates and class properties")
                  ->require_subcommand(1);
  std::string witness_path, menu_path;
  auto* ver_compat = ver->add_subcommand("compat", "C-compatibility of a witness");
  ver_compat->add_option("--input,--instance", input, "sadp-instance document")->required();
  ver_compat->add_option("--witness", witness_path, "witness document (default: rebuilt)");
  ver_compat->callback([&] {
    action = [&] {
      const auto inst = load_as<SADPInstance>(input, "sadp-instance");
      CompatibilityWitness w;
      if (!witness_path.empty()) {
        w = load_as<CompatibilityWitness>(witness_path, "witness");
      } else {
        const auto& p = inst.provenance();
        if (!p || p->construction != Construction::kItemTruncation) {
          throw InvalidArgument("no --witness given and the instance has no it provenance");
        }
        w = witness_for_IT(p->v, p->w, inst.k(), g.cap);
      }
      const CCompatibilityReport r = check_C_compatibility(inst, w, g.cap);
      emit({report_of(r)});
      return r.ok ? kOk : kVerifyFailed;
    };
  });
  auto* ver_bal = ver->add_subcommand("balance", "Balancedness against its bound");
  ver_bal->add_option("--input,--instance", input, "sadp-instance document")->required();
  ver_bal->callback([&] {
    action = [&] {
      const ReductionReport r = reduction_report(load_as<SADPInstance>(input, "sadp-instance"), g.cap);
      emit({report_of(r)});
      return r.within_bound ? kOk : kVerifyFailed;
    };
  });
  auto* ver_class = ver->add_subcommand("class", "Normalization, monotonicity, submodularity");
  ver_class->add_option("--input", input, "valuation document")->required();
  ver_class->callback([&] {
    action = [&] {
      const PropertyReport r = check_properties(load_as<Valuation>(input, "valuation"), g.cap);
      emit({report_of(r)});
      return r.normalized && r.monotone ? kOk : kVerifyFailed;
    };
  });
  auto* ver_menu = ver->add_subcommand("menu", "IC and IR residuals of a menu");
  ver_menu->add_option("--input,--distribution", input, "distribution document")->required();
  ver_menu->add_option("--menu", menu_path, "menu document")->required();
  ver_menu->callback([&] {
    action = [&] {
      const MenuResiduals r = verify_menu(load_as<TypeDistribution>(input, "distribution"),
                                          load_as<Menu>(menu_path, "menu"));
      emit({report_of(r)});
      const bool ok = r.lotteries_valid && sgn(r.max_ic_violation) == 0 && sgn(r.max_ir_violation) == 0;
      return ok ? kOk : kVerifyFailed;
    };
  });

  // solve
  auto* sol = app.add_subcommand("solve", "Exact desk-scale solvers")->require_subcommand(1);
  std::string menu_out;
  bool trivial = false;
  auto* sol_odp = sol->add_subcommand("odp", "max v(S) - w(S) by enumeration");
  sol_odp->add_option("--input", input, "odp-instance document")->required();
  sol_odp->callback([&] {
    action = [&] {
      const auto pair = load_as<OdpInstance>(input, "odp-instance");
      emit({report_of(brute_force_odp(pair.v, pair.w, g.cap), pair.v, pair.w)});
      return kOk;
    };
  });
  auto* sol_sadp = sol->add_subcommand("sadp", "Optimal gaps, or the ratios of --solution");
  sol_sadp->add_option("--input,--instance", input, "sadp-instance document")->required();
  sol_sadp->add_option("--solution", solution, "Evaluate this set, e.g. 0,3");
  sol_sadp->callback([&] {
    action = [&] {
      const auto inst = load_as<SADPInstance>(input, "sadp-instance");
      if (solution.empty()) {
        emit({report_of(reduction_report(inst, g.cap))});
      } else {
        emit({report_of(sadp_eval(inst, parse_items(solution, inst.ground_size()), g.cap))});
      }
      return kOk;
    };
  });
  auto* sol_md = sol->add_subcommand("mdmdp", "Revenue-optimal lottery menu");
  sol_md->add_option("--input", input, "distribution document")->required();
  sol_md->add_option("--menu-out", menu_out, "Write the menu here");
  sol_md->add_flag("--trivial", trivial, "Sell the grand bundle to the best single type instead");
  sol_md->callback([&] {
    action = [&] {
      const auto d = load_as<TypeDistribution>(input, "distribution");
      if (trivial) {
        const TrivialBundle b = trivial_bundle_menu(d);
        if (!menu_out.empty()) emit({b.menu}, menu_out);
        emit({report_of(b)});
      } else {
        const MenuSolution s = lp_optimal_mdmdp(d, lp_cap());
        if (!menu_out.empty()) emit({s.menu}, menu_out);
        emit({report_of(s)});
      }
      return kOk;
    };
  });

  // game
  auto* game = app.add_subcommand("game", "Hidden-perturbation query games")->require_subcommand(1);
  std::size_t budget = 0;
  std::uint64_t trials = 10000, seed = 1;
  std::string algorithm = "random-prober";
  for (const char* name : {"value", "demand"}) {
    auto* sub = game->add_subcommand(name, std::string(name) + "-oracle game");
    sub->add_option("--m", m, "Item count (even)")->required();
    sub->add_option("--budget", budget, "Queries per trial")->required();
    sub->add_option("--trials", trials, "Trial count")->capture_default_str();
    sub->add_option("--seed", seed, "Seed")->capture_default_str();
    sub->add_option("--algorithm", algorithm,
                    "zero-query, random-prober or exhaustive-scanner")->capture_default_str();
    sub->callback([&, name] {
      action = [&, name] {
        const PerturbableFamily fam = boxs_family(m);
        auto alg = make_algorithm(algorithm);
        const GameTranscript t = std::string(name) == "value"
                                     ? run_value_game(*alg, fam, budget, trials, seed)
                                     : run_demand_game(*alg, fam, budget, trials, seed);
        std::cerr << t.game << " game, " << t.algorithm << ": " << t.successes << "/"
                  << t.trials - t.voided << " successes";
        if (t.bound) std::cerr << ", bound " << to_string(*t.bound);
        std::cerr << "\n";
        emit({t});
        return kOk;
      };
    });
  }

  // params
  auto* par = app.add_subcommand("params", "Parameter formulas")->require_subcommand(1);
  std::string alpha, d, eps, k_text;
  auto* par_q = par->add_subcommand("quality", "alpha - (1 - alpha) d / (k - 1)");
  par_q->add_option("--alpha", alpha, "Rational in [0, 1]")->required();
  par_q->add_option("--d", d, "Balancedness")->required();
  par_q->add_option("--k", k, "Valuation count")->required();
  par_q->callback([&] {
    action = [&] {
      const Rational a = parse_rational(alpha), dd = parse_rational(d);
      const Rational q = quality_formula(a, dd, k);
      if (g.output.empty()) {
        std::cout << to_string(q) << "\n";
      } else {
        emit({quality_report(a, dd, k, q)});
      }
      return kOk;
    };
  });
  auto* par_b = par->add_subcommand("budget", "k, item count and bound of the hardness construction");
  par_b->add_option("--m", m, "Item count")->required();
  auto* eps_opt = par_b->add_option("--eps", eps, "Rational in (0, 1)");
  par_b->add_option("--k", k_text, "Use this k directly")->excludes(eps_opt);
  par_b->callback([&] {
    action = [&] {
      HardnessBudget b;
      if (!k_text.empty()) {
        BigInt kk;
        if (kk.set_str(k_text, 10) != 0) throw InvalidArgument("bad --k '" + k_text + "'");
        b = hardness_budget_for_k(m, kk);
      } else if (!eps.empty()) {
        b = hardness_budget(m, parse_rational(eps));
      } else {
        throw InvalidArgument("need --eps or --k");
      }
      if (g.output.empty()) {
        std::cout << "k=" << b.k.get_str() << " items=" << b.items.get_str()
                  << " support=" << b.support.get_str() << " bound=" << to_string(b.bound) << "\n";
      } else {
        emit({report_of(b)});
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    g.cap = cap_flag != 0 ? cap_flag : cap_from_env();
    return action ? action() : kInputError;
  } catch (const FormatError& e) {
    std::cerr << "mdd: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    std::cerr << "mdd: invalid input: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "mdd: " << e.what() << " (raise with --cap or MDD_ENUM_CAP)\n";
  } catch (const ArithmeticOverflow& e) {
    std::cerr << "mdd: overflow: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "mdd: invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "mdd: invalid input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "mdd: " << e.what() << "\n";
  }
  return kInputError;
}
