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

#include "monodiff/locproj.hpp"

#include <algorithm>

#include "monodiff/errors.hpp"
#include "monodiff/linalg.hpp"

namespace monodiff {

LaurentPoly RFunctional::act(const WeylElement& d) const {
  LaurentPoly out;
  for (const auto& term : terms) {
    LaurentPoly image = d.apply(LaurentPoly::monomial(term.b));
    for (const auto& [n, c] : image.terms()) {
      out.add_term(n + term.a, term.c * c);
    }
  }
  return out;
}

std::vector<int> IdempotentElement::support() const {
  std::vector<int> out;
  out.reserve(columns.size());
  for (const auto& [b, f] : columns) out.push_back(b);
  return out;
}

bool is_s_element(const IdempotentElement& pi, const SemigroupPair& pair) {
  for (const auto& [b, f] : pi.columns) {
    if (!pair.source.contains(b)) return false;
    if (!divrem(f, ell(-b, pair)).second.is_zero()) return false;
    for (const auto& [b2, f2] : pi.columns) {
      Rational expected(b == b2 ? 1 : 0);
      if (f2.evaluate(Rational(b)) != expected) return false;
    }
  }
  return true;
}

IdempotentElement compose(const IdempotentElement& outer,
                          const IdempotentElement& inner) {
  IdempotentElement out;
  for (const auto& [b, fb] : inner.columns) {
    UniPoly col;
    for (const auto& [a, ga] : outer.columns) {
      col = col + ga.scaled(fb.evaluate(Rational(a)));
    }
    if (!col.is_zero()) out.columns.emplace(b, col);
  }
  return out;
}

IdempotentElement orthogonal_sum(const IdempotentElement& alpha,
                                 const IdempotentElement& beta) {
  IdempotentElement comp = compose(beta, alpha);
  IdempotentElement out;
  auto add_into = [&out](int b, const UniPoly& f) {
    auto [it, inserted] = out.columns.emplace(b, f);
    if (!inserted) {
      it->second = it->second + f;
      if (it->second.is_zero()) out.columns.erase(it);
    }
  };
  for (const auto& [b, f] : alpha.columns) add_into(b, f);
  for (const auto& [b, f] : beta.columns) add_into(b, f);
  for (const auto& [b, f] : comp.columns) add_into(b, -f);
  return out;
}

std::vector<int> select_support(const UniPoly& f, int d,
                                const SemigroupPair& pair) {
  if (f.is_zero()) return {};
  if (!divrem(f, ell(d, pair)).second.is_zero()) {
    throw NotInIdeal("(" + f.str() + ") is not divisible by the degree-" +
                     std::to_string(d) + " vanishing polynomial");
  }
  // First pick: smallest source member where f is nonzero. f has at most
  // deg f roots, so some member below any run of deg f + 1 members works.
  int b1 = -1;
  for (int b = 0;; ++b) {
    if (pair.source.contains(b) && !f.evaluate(Rational(b)).is_zero()) {
      b1 = b;
      break;
    }
  }
  std::vector<int> chosen{b1};
  // Live set: members of the running escape-set intersection where f is
  // nonzero. Finite from the first intersection on.
  FiniteIntSet live = z_set(-b1, pair.source, pair.target);
  while (true) {
    int next = -1;
    for (int b : live) {
      if (!f.evaluate(Rational(b)).is_zero()) {
        next = b;
        break;
      }
    }
    if (next < 0) break;
    chosen.push_back(next);
    live = live.intersect(z_set(-next, pair.source, pair.target));
  }
  return chosen;
}

std::vector<std::pair<int, UniPoly>> partition_of_unity(
    const UniPoly& f, int d, const SemigroupPair& pair) {
  if (f.is_zero()) throw ZeroInput("cannot split the zero polynomial");
  std::vector<int> support = select_support(f, d, pair);
  std::vector<UniPoly> ells;
  ells.reserve(support.size());
  for (int b : support) ells.push_back(ell(-b, pair));
  BezoutResult bez = bezout_many(ells);
  // The gcd collects the common escape points; all of them are roots of f
  // (anything else would still be live), so the division is exact.
  UniPoly h = exact_divide(f, bez.gcd);
  std::vector<std::pair<int, UniPoly>> out;
  out.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    Rational value = f.evaluate(Rational(support[i]));
    UniPoly fi = (bez.cofactors[i] * ells[i] * h).scaled(Rational(1) / value);
    out.emplace_back(support[i], fi);
  }
  return out;
}

IdempotentElement to_idempotent(
    const std::vector<std::pair<int, UniPoly>>& partition) {
  IdempotentElement pi;
  for (const auto& [b, f] : partition) {
    if (!f.is_zero()) pi.columns.emplace(b, f);
  }
  return pi;
}

namespace {

// Degree-by-degree action, no membership check.
WeylElement act(const IdempotentElement& pi, const WeylElement& d) {
  WeylElement out;
  for (const auto& [deg, g] : d.terms()) {
    UniPoly image;
    for (const auto& [b, fb] : pi.columns) {
      image = image + fb.scaled(g.evaluate(Rational(b)));
    }
    out = out + WeylElement::from_term(image, deg);
  }
  return out;
}

}  // namespace

WeylElement apply_idempotent(const IdempotentElement& pi, const WeylElement& d,
                             const SemigroupPair& pair) {
  if (!is_member(d, pair)) {
    throw NotMember("operator " + d.str() + " is not a member over " +
                    pair.str());
  }
  return act(pi, d);
}

IdempotentElement idempotent_for(const std::vector<WeylElement>& ds,
                                 const SemigroupPair& pair) {
  IdempotentElement alpha;
  for (const auto& d : ds) {
    if (!is_member(d, pair)) {
      throw NotMember("operator " + d.str() + " is not a member over " +
                      pair.str());
    }
    for (const auto& [deg, g] : d.terms()) {
      // Part of this component not already fixed by alpha.
      UniPoly fixed;
      for (const auto& [b, fb] : alpha.columns) {
        fixed = fixed + fb.scaled(g.evaluate(Rational(b)));
      }
      UniPoly residue = g - fixed;
      if (residue.is_zero()) continue;
      IdempotentElement beta =
          to_idempotent(partition_of_unity(residue, deg, pair));
      alpha = orthogonal_sum(alpha, beta);
    }
  }
  return alpha;
}

}  // namespace monodiff
