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

#include "monodiff/serialize.hpp"

#include <algorithm>
#include <vector>

#include "monodiff/errors.hpp"

namespace monodiff {

json to_json(const UniPoly& f) {
  json coeffs = json::array();
  for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coeff(k).str());
  return coeffs;
}

json to_json(const LaurentPoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms()) {
    out.push_back(json{{"e", e}, {"c", c.str()}});
  }
  return out;
}

json to_json(const WeylElement& d) {
  json terms = json::array();
  for (const auto& [deg, f] : d.terms()) {
    terms.push_back(json{{"d", deg}, {"poly", to_json(f)}});
  }
  return json{{"terms", terms}};
}

json to_json(const IdempotentElement& e) {
  json cols = json::array();
  for (const auto& [b, f] : e.columns) {
    cols.push_back(json{{"b", b}, {"poly", to_json(f)}});
  }
  return json{{"columns", cols}};
}

json to_json(const TensorPresentation& p) {
  json summands = json::array();
  for (const auto& s : p.summands) {
    summands.push_back(
        json{{"left", json{{"d", s.left.deg}, {"poly", to_json(s.left.poly)}}},
             {"right",
              json{{"d", s.right.deg}, {"poly", to_json(s.right.poly)}}}});
  }
  return json{{"base", p.base == BaseRing::A ? "A" : "B"},
              {"summands", summands}};
}

json to_json(const NormalForm& f) {
  json comps = json::array();
  for (const auto& [d, poly] : f.components) {
    comps.push_back(json{{"d", d}, {"poly", poly.str()}});
  }
  return json{{"components", comps}};
}

json to_json(const ValidationReport& r) {
  json legs = json::array();
  for (const auto& [left, right] : r.summand_legs) {
    legs.push_back(json{{"left", left}, {"right", right}});
  }
  return json{{"legs_ok", r.legs_ok},
              {"image_matches", r.image_matches},
              {"leibniz_matches", r.leibniz_matches},
              {"checks_agree", r.checks_agree()},
              {"valid", r.valid()},
              {"summand_legs", legs}};
}

UniPoly unipoly_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    coeffs.push_back(Rational::from_string(c.get<std::string>()));
  }
  return UniPoly::from_coeffs(coeffs);
}

WeylElement weyl_from_json(const json& j) {
  WeylElement out;
  for (const auto& term : j.at("terms")) {
    out = out + WeylElement::from_term(unipoly_from_json(term.at("poly")),
                                       term.at("d").get<int>());
  }
  return out;
}

IdempotentElement idempotent_from_json(const json& j) {
  IdempotentElement out;
  for (const auto& col : j.at("columns")) {
    UniPoly f = unipoly_from_json(col.at("poly"));
    if (!f.is_zero()) out.columns.emplace(col.at("b").get<int>(), f);
  }
  return out;
}

TensorPresentation presentation_from_json(const json& j,
                                          const SemigroupPair& pair) {
  TensorPresentation out{pair,
                         j.at("base").get<std::string>() == "B" ? BaseRing::B
                                                                : BaseRing::A,
                         {}};
  for (const auto& s : j.at("summands")) {
    out.summands.push_back(
        TensorSummand{{unipoly_from_json(s.at("left").at("poly")),
                       s.at("left").at("d").get<int>()},
                      {unipoly_from_json(s.at("right").at("poly")),
                       s.at("right").at("d").get<int>()}});
  }
  return out;
}

std::string presentation_text(const TensorPresentation& p) {
  if (p.summands.empty()) return "0";
  const std::string tensor = p.base == BaseRing::A ? " (x)_A " : " (x)_B ";
  std::string out;
  for (const auto& s : p.summands) {
    if (!out.empty()) out += " + ";
    out += "(" + WeylElement::from_term(s.left.poly, s.left.deg).str() + ")" +
           tensor + "(" +
           WeylElement::from_term(s.right.poly, s.right.deg).str() + ")";
  }
  return out;
}

namespace {

std::string latex_int(const Integer& n) { return n.get_str(); }

// Joins "lhs" and a signed term: handles leading "-" of the term.
void append_signed(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (!term.empty() && term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

std::string latex_t_power(int d) {
  if (d == 0) return "";
  if (d == 1) return "t";
  return "t^{" + std::to_string(d) + "}";
}

// Variable power with braces: x, x^{2}.
std::string latex_var_pow(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^{" + std::to_string(k) + "}";
}

}  // namespace

std::string latex(const Rational& r) {
  if (r.is_integer()) return latex_int(r.num());
  std::string body =
      "\\frac{" + latex_int(r.sign() < 0 ? -r.num() : r.num()) + "}{" +
      latex_int(r.den()) + "}";
  return r.sign() < 0 ? "-" + body : body;
}

std::string latex(const UniPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  IntegerFactorization fac = factor_integer_roots(f);
  if (fac.splits && !fac.roots.empty()) {
    std::string out;
    if (fac.lead == Rational(-1)) {
      out = "-";
    } else if (!fac.lead.is_one()) {
      out = latex(fac.lead);
    }
    std::size_t i = 0;
    while (i < fac.roots.size()) {
      std::size_t j = i;
      while (j < fac.roots.size() && fac.roots[j] == fac.roots[i]) ++j;
      int r = fac.roots[i];
      std::string factor = var;
      if (r > 0) {
        factor = "(" + var + " - " + std::to_string(r) + ")";
      } else if (r < 0) {
        factor = "(" + var + " + " + std::to_string(-r) + ")";
      }
      if (j - i > 1) factor += "^{" + std::to_string(j - i) + "}";
      out += factor;
      i = j;
    }
    return out;
  }
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(k);
    if (c.is_zero()) continue;
    std::string pow = latex_var_pow(var, k);
    std::string term;
    if (pow.empty()) {
      term = latex(c);
    } else if (c.is_one()) {
      term = pow;
    } else if (c == Rational(-1)) {
      term = "-" + pow;
    } else {
      term = latex(c) + pow;
    }
    append_signed(out, term);
  }
  return out;
}

std::string latex(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  static const std::vector<std::string> kNames{"x", "y", "z"};
  // Descending graded-lex, like MultiPoly::str().
  std::vector<std::pair<Exponents, Rational>> terms(f.terms().begin(),
                                                    f.terms().end());
  std::reverse(terms.begin(), terms.end());
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      std::string name = v < kNames.size()
                             ? kNames[v]
                             : "x_{" + std::to_string(v + 1) + "}";
      mono += latex_var_pow(name, e[v]);
    }
    std::string term;
    if (mono.empty()) {
      term = latex(c);
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Rational(-1)) {
      term = "-" + mono;
    } else {
      term = latex(c) + mono;
    }
    append_signed(out, term);
  }
  return out;
}

std::string latex(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string pow = latex_t_power(e);
    std::string term;
    if (pow.empty()) {
      term = latex(c);
    } else if (c.is_one()) {
      term = pow;
    } else if (c == Rational(-1)) {
      term = "-" + pow;
    } else {
      term = latex(c) + pow;
    }
    append_signed(out, term);
  }
  return out;
}

namespace {

// One homogeneous piece f # t^d: polynomial (parenthesized when it is a
// sum) followed by the t-power.
std::string latex_weyl_term(const UniPoly& f, int d) {
  std::string poly = latex(f);
  std::string tpow = latex_t_power(d);
  if (tpow.empty()) return poly;
  if (f.is_one()) return tpow;
  bool needs_parens = poly.find(" + ") != std::string::npos ||
                      poly.find(" - ") != std::string::npos;
  if (needs_parens) poly = "\\left(" + poly + "\\right)";
  return poly + "\\," + tpow;
}

}  // namespace

std::string latex(const WeylElement& d) {
  if (d.terms().empty()) return "0";
  std::string out;
  for (const auto& [deg, f] : d.terms()) {
    append_signed(out, latex_weyl_term(f, deg));
  }
  return out;
}

std::string latex(const TensorPresentation& p) {
  if (p.summands.empty()) return "0";
  const std::string otimes =
      p.base == BaseRing::A ? " \\otimes_{A} " : " \\otimes_{B} ";
  std::string out;
  for (const auto& s : p.summands) {
    std::string left = latex_weyl_term(s.left.poly, s.left.deg);
    std::string right = latex_weyl_term(s.right.poly, s.right.deg);
    append_signed(out, left + otimes + right);
  }
  return out;
}

std::string latex(const NormalForm& f) {
  if (f.components.empty()) return "0";
  std::string out;
  for (const auto& [d, poly] : f.components) {
    std::string body = latex(poly);
    std::string tpow = latex_t_power(d);
    std::string term;
    if (tpow.empty()) {
      term = body;
    } else if (poly.is_one()) {
      term = tpow;
    } else {
      bool sum = body.find(" + ") != std::string::npos ||
                 body.find(" - ") != std::string::npos;
      if (sum) body = "\\left(" + body + "\\right)";
      term = body + "\\," + tpow;
    }
    append_signed(out, term);
  }
  return out;
}

}  // namespace monodiff
