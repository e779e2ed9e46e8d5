// Copyright 2026 the monodiff authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monodiff/errors.hpp"
#include "monodiff/hopf.hpp"
#include "monodiff/locproj.hpp"
#include "monodiff/parser.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/serialize.hpp"
#include "monodiff/verify.hpp"
#include "monodiff/weyl.hpp"

namespace {

using monodiff::BaseRing;
using monodiff::IdentityCheck;
using monodiff::json;
using monodiff::NormalForm;
using monodiff::NumericalSemigroup;
using monodiff::SemigroupPair;
using monodiff::TensorPresentation;
using monodiff::ValidationReport;
using monodiff::WeylElement;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

// Bad command-line input (as opposed to a domain error from the algebra).
struct UsageError : monodiff::Error {
  using Error::Error;
};

struct Options {
  std::string format = "text";
  std::string pair_spec = "2,3";
  std::string base = "A";
  std::optional<int> max_degree;
  unsigned seed = 0;  // reserved for sampling subcommands
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty generator in '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError("no generators in '" + text + "'");
  return out;
}

NumericalSemigroup make_semigroup(const std::vector<int>& gens) {
  try {
    return NumericalSemigroup(gens);
  } catch (const monodiff::GcdNotOne& e) {
    throw UsageError(e.what());
  }
}

// "2,3" for a diagonal pair, "1:2,3" for (source <1>, target <2,3>).
SemigroupPair parse_pair(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    return SemigroupPair::diagonal(make_semigroup(parse_int_list(spec)));
  }
  return SemigroupPair{make_semigroup(parse_int_list(spec.substr(0, colon))),
                       make_semigroup(parse_int_list(spec.substr(colon + 1)))};
}

BaseRing parse_base(const std::string& base) {
  if (base == "A" || base == "a") return BaseRing::A;
  if (base == "B" || base == "b") return BaseRing::B;
  throw UsageError("base must be A or B, got '" + base + "'");
}

json envelope(const std::string& command) {
  return json{{"schema", "monodiff/1"}, {"command", command}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json check_list_json(const std::vector<IdentityCheck>& checks) {
  json items = json::array();
  json failures = json::array();
  for (const auto& c : checks) {
    items.push_back(json{{"name", c.name}, {"pass", c.holds}});
    if (!c.holds) failures.push_back(c.name);
  }
  return json{{"checks", items}, {"failures", failures}};
}

WeylElement eval_expr(const std::string& text, const SemigroupPair& pair) {
  return monodiff::evaluate(monodiff::parse(text), pair);
}

int run_semigroup_info(const Options& opt, const std::string& gens) {
  NumericalSemigroup s = make_semigroup(parse_int_list(gens));
  monodiff::FiniteIntSet apery = monodiff::apery_set(s, s.multiplicity());
  std::vector<int> gaps = s.gaps();
  if (opt.format == "json") {
    json j = envelope("semigroup info");
    j["generators"] = s.generators();
    j["frobenius"] = s.frobenius();
    j["multiplicity"] = s.multiplicity();
    j["gaps"] = gaps;
    j["symmetric"] = s.is_symmetric();
    j["apery"] = json{{"modulus", s.multiplicity()},
                      {"elements", apery.values()}};
    print_json(j);
  } else if (opt.format == "latex") {
    std::string g;
    for (int v : s.generators()) g += (g.empty() ? "" : ", ") + std::to_string(v);
    std::cout << "\\langle " << g << " \\rangle:\\; F = " << s.frobenius()
              << ",\\; \\text{symmetric: " << (s.is_symmetric() ? "yes" : "no")
              << "}\n";
  } else {
    std::cout << "generators: " << s.str() << "\n"
              << "frobenius: " << s.frobenius() << "\n"
              << "multiplicity: " << s.multiplicity() << "\n"
              << "gaps: " << monodiff::FiniteIntSet(gaps).str() << "\n"
              << "symmetric: " << (s.is_symmetric() ? "true" : "false") << "\n"
              << "apery(" << s.multiplicity() << "): " << apery.str() << "\n";
  }
  return kExitOk;
}

int run_zset(const Options& opt, int d) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  monodiff::FiniteIntSet z = monodiff::z_set(d, pair.source, pair.target);
  monodiff::UniPoly ell = monodiff::ell(d, pair);
  WeylElement gen = monodiff::generator_L(d, pair);
  if (opt.format == "json") {
    json j = envelope("zset");
    j["d"] = d;
    j["pair"] = json{{"source", pair.source.generators()},
                     {"target", pair.target.generators()}};
    j["zset"] = z.values();
    j["ell"] = monodiff::to_json(ell);
    j["generator"] = monodiff::to_json(gen);
    j["text"] = gen.str();
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << "\\mathcal{Z}_{" << d << "} = \\{";
    bool first = true;
    for (int v : z) {
      std::cout << (first ? "" : ", ") << v;
      first = false;
    }
    std::cout << "\\},\\quad \\ell_{" << d << "} = " << monodiff::latex(ell)
              << "\n";
  } else {
    std::cout << "Z_" << d << pair.str() << " = " << z.str() << "\n"
              << "ell_" << d << " = " << ell.str() << "\n"
              << "L_" << d << " = " << gen.str() << "\n";
  }
  return kExitOk;
}

int run_op_eval(const Options& opt, const std::string& expr) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  monodiff::OperatorExpr tree = monodiff::parse(expr);
  WeylElement d = monodiff::evaluate(tree, pair);
  bool member = monodiff::is_member(d, pair);
  if (opt.format == "json") {
    json j = envelope("op eval");
    j["input"] = expr;
    j["canonical"] = monodiff::print(tree);
    j["operator"] = monodiff::to_json(d);
    j["text"] = d.str();
    j["member"] = member;
    j["order"] = d.order();
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << monodiff::latex(d) << "\n";
  } else {
    std::cout << monodiff::print(tree) << "\n"
              << "= " << d.str() << "\n"
              << "member of " << pair.str() << ": "
              << (member ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_op_mul(const Options& opt, const std::string& lhs,
               const std::string& rhs) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  WeylElement product = eval_expr(lhs, pair) * eval_expr(rhs, pair);
  if (opt.format == "json") {
    json j = envelope("op mul");
    j["operator"] = monodiff::to_json(product);
    j["text"] = product.str();
    j["member"] = monodiff::is_member(product, pair);
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << monodiff::latex(product) << "\n";
  } else {
    std::cout << product.str() << "\n";
  }
  return kExitOk;
}

int run_op_member(const Options& opt, const std::string& expr) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  WeylElement d = eval_expr(expr, pair);
  bool member = monodiff::is_member(d, pair);
  if (opt.format == "json") {
    json j = envelope("op member");
    j["member"] = member;
    j["text"] = d.str();
    print_json(j);
  } else {
    std::cout << (member ? "true" : "false") << "\n";
  }
  // Scriptable: the exit code carries the answer.
  return member ? kExitOk : kExitVerification;
}

int run_coproduct(const Options& opt, const std::string& expr) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  BaseRing base = parse_base(opt.base);
  WeylElement d = eval_expr(expr, pair);
  TensorPresentation p =
      monodiff::rewrite_coproduct(d, pair, base, opt.max_degree);
  ValidationReport report = monodiff::validate_presentation(p, d);
  bool coassoc = monodiff::check_coassoc(d, p);
  bool cocomm = monodiff::check_cocommutative(p);
  bool counit_laws = monodiff::check_counit_laws(p, d);
  bool takeuchi = monodiff::check_takeuchi(p, d);
  bool all = report.valid() && coassoc && cocomm && counit_laws && takeuchi;
  if (opt.format == "json") {
    json j = envelope("coproduct");
    j["operator"] = monodiff::to_json(d);
    j["presentation"] = monodiff::to_json(p);
    j["image"] = monodiff::to_json(monodiff::presentation_image(p));
    j["validation"] = monodiff::to_json(report);
    j["coassociative"] = coassoc;
    j["cocommutative"] = cocomm;
    j["counit_laws"] = counit_laws;
    j["base_element_crossing"] = takeuchi;
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << monodiff::latex(p) << "\n";
  } else {
    std::cout << "operator: " << d.str() << "\n"
              << "presentation (base " << opt.base
              << "): " << monodiff::presentation_text(p) << "\n"
              << "image: " << monodiff::presentation_image(p).str() << "\n"
              << "total degree: " << p.total_degree() << "\n"
              << "valid: " << (report.valid() ? "true" : "false") << "\n"
              << "coassociative: " << (coassoc ? "true" : "false") << "\n"
              << "cocommutative: " << (cocomm ? "true" : "false") << "\n"
              << "counit laws: " << (counit_laws ? "true" : "false") << "\n"
              << "base-element crossing: " << (takeuchi ? "true" : "false")
              << "\n";
  }
  return all ? kExitOk : kExitVerification;
}

int run_antipode(const Options& opt, const std::string& expr) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  if (!(pair.source == pair.target)) {
    throw UsageError("antipode needs a diagonal pair, got " + pair.str());
  }
  WeylElement d = eval_expr(expr, pair);
  WeylElement s = monodiff::antipode(d, pair.target);
  bool involution = monodiff::antipode(s, pair.target) == d;
  monodiff::LaurentPoly augmentation =
      monodiff::right_augmentation(d, pair.target);
  if (opt.format == "json") {
    json j = envelope("antipode");
    j["operator"] = monodiff::to_json(d);
    j["antipode"] = monodiff::to_json(s);
    j["text"] = s.str();
    j["involution"] = involution;
    j["right_augmentation"] = monodiff::to_json(augmentation);
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << monodiff::latex(s) << "\n";
  } else {
    std::cout << "S(" << d.str() << ") = " << s.str() << "\n"
              << "involution: " << (involution ? "true" : "false") << "\n"
              << "right augmentation: " << augmentation.str() << "\n";
  }
  return involution ? kExitOk : kExitVerification;
}

int run_translation(const Options& opt, const std::string& expr) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  if (!(pair.source == pair.target)) {
    throw UsageError("translation needs a diagonal pair, got " + pair.str());
  }
  WeylElement d = eval_expr(expr, pair);
  TensorPresentation p =
      monodiff::rewrite_translation(d, pair.target, opt.max_degree);
  NormalForm image = monodiff::translation_presentation_image(p);
  bool image_matches = image == monodiff::translation_normal_form(d);
  // The Galois map must carry the translation tensor back to D (x) 1.
  NormalForm d_tensor_one;
  for (const auto& [deg, f] : d.terms()) {
    d_tensor_one.add_component(deg, monodiff::embed(f, 2, 0));
  }
  bool galois_ok = monodiff::galois_map(image) == d_tensor_one;
  bool all = image_matches && galois_ok;
  if (opt.format == "json") {
    json j = envelope("translation");
    j["operator"] = monodiff::to_json(d);
    j["presentation"] = monodiff::to_json(p);
    j["image"] = monodiff::to_json(image);
    j["image_matches"] = image_matches;
    j["galois_roundtrip"] = galois_ok;
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << monodiff::latex(p) << "\n";
  } else {
    std::cout << "operator: " << d.str() << "\n"
              << "presentation (legs t-right): "
              << monodiff::presentation_text(p) << "\n"
              << "translation image matches: "
              << (image_matches ? "true" : "false") << "\n"
              << "galois map returns operator (x) 1: "
              << (galois_ok ? "true" : "false") << "\n";
  }
  return all ? kExitOk : kExitVerification;
}

int run_idempotent(const Options& opt, const std::vector<std::string>& exprs) {
  SemigroupPair pair = parse_pair(opt.pair_spec);
  std::vector<WeylElement> ds;
  ds.reserve(exprs.size());
  for (const auto& e : exprs) ds.push_back(eval_expr(e, pair));
  monodiff::IdempotentElement pi = monodiff::idempotent_for(ds, pair);
  bool well_formed = monodiff::is_s_element(pi, pair);
  bool fixes = true;
  for (const auto& d : ds) {
    if (monodiff::apply_idempotent(pi, d, pair) != d) fixes = false;
  }
  if (opt.format == "json") {
    json j = envelope("idempotent");
    j["pair"] = json{{"source", pair.source.generators()},
                     {"target", pair.target.generators()}};
    j["idempotent"] = monodiff::to_json(pi);
    j["well_formed"] = well_formed;
    j["fixes_inputs"] = fixes;
    print_json(j);
  } else {
    std::cout << "pair: " << pair.str() << "\n" << "columns:\n";
    for (const auto& [b, f] : pi.columns) {
      std::cout << "  b=" << b << ": " << f.str() << "\n";
    }
    std::cout << "well-formed: " << (well_formed ? "true" : "false") << "\n"
              << "fixes inputs: " << (fixes ? "true" : "false") << "\n";
  }
  return (well_formed && fixes) ? kExitOk : kExitVerification;
}

int run_verify_cusp(const Options& opt) {
  std::vector<IdentityCheck> checks = monodiff::verify_cusp_suite();
  int failures = 0;
  for (const auto& c : checks) {
    if (!c.holds) ++failures;
  }
  if (opt.format == "json") {
    json j = envelope("verify cusp");
    j.update(check_list_json(checks));
    j["total"] = checks.size();
    j["passed"] = checks.size() - failures;
    print_json(j);
  } else {
    for (const auto& c : checks) {
      std::cout << (c.holds ? "PASS" : "FAIL") << " " << c.name << "\n";
    }
    std::cout << (checks.size() - failures) << "/" << checks.size()
              << " checks passed\n";
  }
  return failures == 0 ? kExitOk : kExitVerification;
}

int run_witness_tau(const Options& opt, int n) {
  monodiff::TauWitness w = monodiff::tau_witness(n);
  if (opt.format == "json") {
    json j = envelope("witness tau");
    j["n"] = n;
    j["poly"] = w.poly.str({"s", "t"});
    j["total_degree"] = w.total_degree;
    j["exponents_in_semigroup"] = w.exponents_in_semigroup;
    j["degree_below_product_floor"] = w.degree_below_product_floor;
    j["ok"] = w.ok();
    print_json(j);
  } else if (opt.format == "latex") {
    std::cout << monodiff::latex(w.poly) << "\n";
  } else {
    std::cout << "tau(" << n << ") = " << w.poly.str({"s", "t"}) << "\n"
              << "exponents in <2,3> (both factors): "
              << (w.exponents_in_semigroup ? "true" : "false") << "\n"
              << "total degree " << w.total_degree << " = n+2 < 2n = "
              << 2 * n << ": "
              << (w.degree_below_product_floor ? "true" : "false") << "\n";
  }
  return w.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "monodiff: rings of differential operators on monomial curves,\n"
      "their Hopf-algebroid structure, and local projectivity certificates"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_option("--pair", opt.pair_spec,
                 "Semigroup pair: \"2,3\" (diagonal) or \"1:2,3\" "
                 "(source:target generator lists)")
      ->capture_default_str();
  app.add_option("--base", opt.base,
                 "Coring base side: A (target of the pair) or B (source)")
      ->check(CLI::IsMember({"A", "B", "a", "b"}))
      ->capture_default_str();
  app.add_option("--max-degree", opt.max_degree,
                 "Total-degree cap for the rewriting solver");
  app.add_option("--seed", opt.seed, "Seed for sampling subcommands");

  // semigroup info GENS
  auto* semigroup = app.add_subcommand("semigroup", "Numerical semigroups");
  semigroup->require_subcommand(1);
  auto* info = semigroup->add_subcommand("info", "Invariants of <gens>");
  std::string info_gens;
  info->add_option("gens", info_gens, "Comma-separated generators")
      ->required();

  // zset D
  auto* zset = app.add_subcommand(
      "zset", "Escape set and vanishing polynomial for a t-degree");
  int zset_d = 0;
  zset->add_option("d", zset_d, "t-degree")->required();

  // op eval|mul|member
  auto* op = app.add_subcommand("op", "Operator arithmetic");
  op->require_subcommand(1);
  auto* op_eval = op->add_subcommand("eval", "Evaluate an expression");
  std::string eval_expr_text;
  op_eval->add_option("expr", eval_expr_text, "Operator expression")
      ->required();
  auto* op_mul = op->add_subcommand("mul", "Multiply two expressions");
  std::string mul_lhs, mul_rhs;
  op_mul->add_option("lhs", mul_lhs, "Left factor")->required();
  op_mul->add_option("rhs", mul_rhs, "Right factor")->required();
  auto* op_member = op->add_subcommand("member", "Membership test");
  std::string member_expr;
  op_member->add_option("expr", member_expr, "Operator expression")
      ->required();

  // coproduct EXPR
  auto* coproduct =
      app.add_subcommand("coproduct", "Rewrite a coproduct as a presentation");
  std::string coproduct_expr;
  coproduct->add_option("expr", coproduct_expr, "Operator expression")
      ->required();

  // antipode EXPR
  auto* antipode_cmd =
      app.add_subcommand("antipode", "Antipode over a symmetric semigroup");
  std::string antipode_expr;
  antipode_cmd->add_option("expr", antipode_expr, "Operator expression")
      ->required();

  // translation EXPR
  auto* translation = app.add_subcommand(
      "translation", "Translation-map presentation and Galois check");
  std::string translation_expr;
  translation->add_option("expr", translation_expr, "Operator expression")
      ->required();

  // idempotent EXPR...
  auto* idempotent = app.add_subcommand(
      "idempotent", "Idempotent fixing the listed operators");
  std::vector<std::string> idempotent_exprs;
  idempotent->add_option("exprs", idempotent_exprs, "Operator expressions")
      ->required();

  // verify cusp
  auto* verify = app.add_subcommand("verify", "Golden verification suites");
  verify->require_subcommand(1);
  auto* verify_cusp =
      verify->add_subcommand("cusp", "Worked-example suite over <2,3>");

  // witness tau N
  auto* witness = app.add_subcommand("witness", "Low-degree witnesses");
  witness->require_subcommand(1);
  auto* witness_tau =
      witness->add_subcommand("tau", "Augmentation-kernel degree witness");
  int tau_n = 3;
  witness_tau->add_option("n", tau_n, "Exponent n >= 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (info->parsed()) return run_semigroup_info(opt, info_gens);
    if (zset->parsed()) return run_zset(opt, zset_d);
    if (op_eval->parsed()) return run_op_eval(opt, eval_expr_text);
    if (op_mul->parsed()) return run_op_mul(opt, mul_lhs, mul_rhs);
    if (op_member->parsed()) return run_op_member(opt, member_expr);
    if (coproduct->parsed()) return run_coproduct(opt, coproduct_expr);
    if (antipode_cmd->parsed()) return run_antipode(opt, antipode_expr);
    if (translation->parsed()) return run_translation(opt, translation_expr);
    if (idempotent->parsed()) return run_idempotent(opt, idempotent_exprs);
    if (verify_cusp->parsed()) return run_verify_cusp(opt);
    if (witness_tau->parsed()) return run_witness_tau(opt, tau_n);
  } catch (const monodiff::SyntaxError& e) {
    std::cerr << "syntax error at offset " << e.offset << ": " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const monodiff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "no subcommand\n";
  return kExitUsage;
}
