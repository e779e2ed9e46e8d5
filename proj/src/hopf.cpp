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

#include "monodiff/hopf.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "monodiff/errors.hpp"
#include "monodiff/linalg.hpp"

namespace monodiff {

void NormalForm::add_component(int d, const MultiPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = components.emplace(d, f);
  if (!inserted) {
    it->second = it->second + f;
    if (it->second.is_zero()) components.erase(it);
  }
}

std::string NormalForm::str() const {
  if (components.empty()) return "0";
  std::string out;
  for (const auto& [d, f] : components) {
    if (!out.empty()) out += " + ";
    std::string body = f.str();
    if (f.terms().size() > 1) body = "(" + body + ")";
    out += body + " # " + t_power_text(d);
  }
  return out;
}

int TensorPresentation::total_degree() const {
  int n = -1;
  for (const auto& s : summands) {
    n = std::max(n, s.left.poly.degree() + s.right.poly.degree());
  }
  return n;
}

LaurentPoly counit(const WeylElement& d, const SemigroupPair& pair) {
  if (!is_member(d, pair)) {
    throw NotMember("operator " + d.str() + " is not a member over " +
                    pair.str());
  }
  LaurentPoly image = d.apply(LaurentPoly::monomial(0));
  for (const auto& [n, c] : image.terms()) {
    if (!pair.target.contains(n)) {
      throw CounitEscapesBase("counit image has exponent " +
                              std::to_string(n) + " outside " +
                              pair.target.str());
    }
  }
  return image;
}

NormalForm coproduct_normal_form(const WeylElement& d) {
  NormalForm out;
  for (const auto& [deg, f] : d.terms()) {
    out.add_component(deg, substitute_sum(f, 2));
  }
  return out;
}

namespace {

// Image without leg-membership checks (validate_presentation reports those
// separately).
NormalForm unchecked_image(const TensorPresentation& p) {
  NormalForm out;
  for (const auto& s : p.summands) {
    out.add_component(s.left.deg + s.right.deg,
                      embed(s.left.poly, 2, 0) * embed(s.right.poly, 2, 1));
  }
  return out;
}

bool leg_is_member(const TensorLeg& leg, const SemigroupPair& pair) {
  if (leg.poly.is_zero()) return true;
  return divrem(leg.poly, ell(leg.deg, pair)).second.is_zero();
}

}  // namespace

NormalForm presentation_image(const TensorPresentation& p) {
  SemigroupPair legs = p.leg_pair();
  for (std::size_t i = 0; i < p.summands.size(); ++i) {
    const auto& s = p.summands[i];
    if (!leg_is_member(s.left, legs) || !leg_is_member(s.right, legs)) {
      throw LegNotMember("summand " + std::to_string(i) +
                         " has a leg outside the coring over " + legs.str());
    }
  }
  return unchecked_image(p);
}

ValidationReport validate_presentation(const TensorPresentation& p,
                                       const WeylElement& d) {
  ValidationReport report;
  SemigroupPair legs = p.leg_pair();
  report.legs_ok = true;
  for (const auto& s : p.summands) {
    bool left_ok = leg_is_member(s.left, legs);
    bool right_ok = leg_is_member(s.right, legs);
    report.summand_legs.emplace_back(left_ok, right_ok);
    report.legs_ok = report.legs_ok && left_ok && right_ok;
  }

  report.image_matches = (unchecked_image(p) == coproduct_normal_form(d));

  // Product-rule grid: enough points to separate polynomials of every
  // degree in play.
  int max_deg = d.order();
  for (const auto& s : p.summands) {
    max_deg = std::max(max_deg, s.left.poly.degree() + s.right.poly.degree());
  }
  const int grid = std::max(max_deg, 0) + 1;
  report.leibniz_matches = true;
  for (int a = 0; a <= grid && report.leibniz_matches; ++a) {
    for (int b = 0; b <= grid && report.leibniz_matches; ++b) {
      LaurentPoly lhs;
      for (const auto& s : p.summands) {
        Rational c =
            s.left.poly.evaluate(Rational(a)) * s.right.poly.evaluate(Rational(b));
        lhs.add_term(s.left.deg + a + s.right.deg + b, c);
      }
      LaurentPoly rhs = d.apply(LaurentPoly::monomial(a + b));
      if (lhs != rhs) report.leibniz_matches = false;
    }
  }
  return report;
}

namespace {

struct Candidate {
  int d1, e1;
  UniPoly left, right;  // solver-coordinate legs
  MultiPoly image{2};
};

// Splits d1 + e1 = d with d1 in [lo, hi], ordered by |2 d1 - d| ascending,
// ties by d1 ascending.
std::vector<std::pair<int, int>> ordered_splits(int d, int lo, int hi) {
  std::vector<int> firsts;
  for (int d1 = lo; d1 <= hi; ++d1) firsts.push_back(d1);
  std::stable_sort(firsts.begin(), firsts.end(), [d](int a, int b) {
    int wa = std::abs(2 * a - d), wb = std::abs(2 * b - d);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  std::vector<std::pair<int, int>> out;
  out.reserve(firsts.size());
  for (int d1 : firsts) out.emplace_back(d1, d - d1);
  return out;
}

// One deepening level: candidates of total degree <= level matched against
// the target polynomial.
std::optional<std::vector<TensorSummand>> solve_level(
    const MultiPoly& target, int d, int level, const SemigroupPair& legs,
    bool translation) {
  const int gap_count = static_cast<int>(legs.source.gaps().size());
  const int lo = -(level + gap_count);
  const int hi = d + level + gap_count;

  std::vector<Candidate> cands;
  for (const auto& [d1, e1] : ordered_splits(d, lo, hi)) {
    UniPoly la = ell(d1, legs);
    UniPoly lb = ell(e1, legs);
    if (translation) {
      // Translation coordinates read the left leg with t-powers on the
      // right (g t^d1 contributes g(x - d1)); the right leg is read as
      // stored. Only the left base polynomial needs the change of frame.
      la = shift(la, -d1);
    }
    const int base_deg = la.degree() + lb.degree();
    if (base_deg > level) continue;
    // Monomial cofactors x^p (x) y^q, graded-lex descending.
    for (int total = level - base_deg; total >= 0; --total) {
      for (int p = total; p >= 0; --p) {
        int q = total - p;
        Candidate c;
        c.d1 = d1;
        c.e1 = e1;
        c.left = UniPoly::monomial(p) * la;
        c.right = UniPoly::monomial(q) * lb;
        c.image = embed(c.left, 2, 0) * embed(c.right, 2, 1);
        cands.push_back(std::move(c));
      }
    }
  }
  if (cands.empty()) return std::nullopt;

  std::map<Exponents, std::size_t, GradedLex> row_of;
  auto row_for = [&row_of](const Exponents& e) {
    return row_of.emplace(e, row_of.size()).first->second;
  };
  for (const auto& [e, c] : target.terms()) row_for(e);
  for (const auto& cand : cands) {
    for (const auto& [e, c] : cand.image.terms()) row_for(e);
  }

  Matrix m(row_of.size(), cands.size());
  std::vector<Rational> rhs(row_of.size(), Rational(0));
  for (const auto& [e, c] : target.terms()) rhs[row_of.at(e)] = c;
  for (std::size_t j = 0; j < cands.size(); ++j) {
    for (const auto& [e, c] : cands[j].image.terms()) {
      m.at(row_of.at(e), j) = c;
    }
  }
  auto solution = linear_solve(std::move(m), std::move(rhs));
  if (!solution) return std::nullopt;

  std::vector<TensorSummand> out;
  for (std::size_t j = 0; j < cands.size(); ++j) {
    const Rational& c = (*solution)[j];
    if (c.is_zero()) continue;
    UniPoly left = cands[j].left.scaled(c);
    UniPoly right = cands[j].right;
    if (translation) {
      // Left leg back to operator storage (t-powers on the left).
      left = shift(left, cands[j].d1);
    }
    out.push_back(TensorSummand{{left, cands[j].d1}, {right, cands[j].e1}});
  }
  return out;
}

int default_cap(int target_degree, const SemigroupPair& legs) {
  return target_degree +
         2 * (legs.target.frobenius() + legs.source.frobenius() + 4);
}

std::vector<TensorSummand> solve_component(const UniPoly& f, int d,
                                           const MultiPoly& target,
                                           const SemigroupPair& legs,
                                           bool translation,
                                           std::optional<int> max_degree) {
  const int start = std::max(f.degree(), 0);
  const int cap = max_degree.value_or(default_cap(f.degree(), legs));
  for (int level = start; level <= cap; ++level) {
    auto summands = solve_level(target, d, level, legs, translation);
    if (summands) return *summands;
  }
  throw NoPresentationWithinBound(
      "no presentation of the degree-" + std::to_string(d) +
      " component within total degree " + std::to_string(cap));
}

}  // namespace

TensorPresentation rewrite_coproduct(const WeylElement& d,
                                     const SemigroupPair& pair, BaseRing base,
                                     std::optional<int> max_degree) {
  TensorPresentation p{pair, base, {}};
  SemigroupPair legs = p.leg_pair();
  if (!is_member(d, legs)) {
    throw NotMember("operator " + d.str() + " is not a member over " +
                    legs.str());
  }
  for (const auto& [deg, f] : d.terms()) {
    MultiPoly target = substitute_sum(f, 2);
    auto summands =
        solve_component(f, deg, target, legs, /*translation=*/false,
                        max_degree);
    p.summands.insert(p.summands.end(), summands.begin(), summands.end());
  }
  return p;
}

TensorPresentation rewrite_translation(const WeylElement& d,
                                       const NumericalSemigroup& a,
                                       std::optional<int> max_degree) {
  SemigroupPair legs = SemigroupPair::diagonal(a);
  if (!is_member(d, legs)) {
    throw NotMember("operator " + d.str() + " is not a member over " +
                    legs.str());
  }
  TensorPresentation p{legs, BaseRing::A, {}};
  for (const auto& [deg, f] : d.terms()) {
    MultiPoly target = compose_affine(f, AffineForm{{{0, 1}, {1, -1}}, -deg}, 2);
    auto summands =
        solve_component(f, deg, target, legs, /*translation=*/true,
                        max_degree);
    p.summands.insert(p.summands.end(), summands.begin(), summands.end());
  }
  return p;
}

namespace {

void add_into(std::map<int, MultiPoly>& acc, int d, const MultiPoly& f) {
  auto it = acc.find(d);
  if (it == acc.end()) {
    if (!f.is_zero()) acc.emplace(d, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

bool check_coassoc(const WeylElement& d, const TensorPresentation& p) {
  std::map<int, MultiPoly> left_expanded, right_expanded, expected;
  for (const auto& [deg, f] : d.terms()) {
    add_into(expected, deg, substitute_sum(f, 3));
  }
  const AffineForm x_plus_y{{{0, 1}, {1, 1}}, 0};
  const AffineForm y_plus_z{{{1, 1}, {2, 1}}, 0};
  for (const auto& s : p.summands) {
    int total = s.left.deg + s.right.deg;
    add_into(left_expanded, total,
             compose_affine(s.left.poly, x_plus_y, 3) *
                 embed(s.right.poly, 3, 2));
    add_into(right_expanded, total,
             embed(s.left.poly, 3, 0) *
                 compose_affine(s.right.poly, y_plus_z, 3));
  }
  return left_expanded == expected && right_expanded == expected;
}

bool check_cocommutative(const TensorPresentation& p) {
  SemigroupPair legs = p.leg_pair();
  TensorPresentation swapped = p;
  for (auto& s : swapped.summands) std::swap(s.left, s.right);
  for (const auto& s : swapped.summands) {
    if (!leg_is_member(s.left, legs) || !leg_is_member(s.right, legs)) {
      return false;
    }
  }
  NormalForm original = unchecked_image(p);
  NormalForm mirrored = unchecked_image(swapped);
  // The mirrored image must be the x<->y exchange of the original, and for
  // symmetric targets both coincide.
  NormalForm exchanged;
  const std::vector<AffineForm> swap_xy{{{{1, 1}}, 0}, {{{0, 1}}, 0}};
  for (const auto& [deg, f] : original.components) {
    exchanged.add_component(deg, substitute_affine(f, swap_xy, 2));
  }
  return mirrored == exchanged && mirrored == original;
}

bool check_counit_laws(const TensorPresentation& p, const WeylElement& d) {
  NormalForm image = unchecked_image(p);
  std::vector<int> degrees;
  for (const auto& [deg, f] : image.components) degrees.push_back(deg);
  for (const auto& [deg, f] : d.terms()) degrees.push_back(deg);
  for (int deg : degrees) {
    MultiPoly f = image.components.count(deg) ? image.components.at(deg)
                                              : MultiPoly(2);
    UniPoly target = d.component(deg);
    if (partial_eval(f, 0, Rational(0)) != embed(target, 2, 1)) return false;
    if (partial_eval(f, 1, Rational(0)) != embed(target, 2, 0)) return false;
  }
  return true;
}

bool check_takeuchi(const TensorPresentation& p, const WeylElement& d) {
  const NumericalSemigroup& base = p.leg_pair().target;
  for (int a : base.generators()) {
    std::map<int, MultiPoly> left_shifted, right_shifted, expected;
    for (const auto& [deg, f] : d.terms()) {
      add_into(expected, deg, substitute_sum(shift(f, a), 2));
    }
    for (const auto& s : p.summands) {
      int total = s.left.deg + s.right.deg;
      add_into(left_shifted, total,
               embed(shift(s.left.poly, a), 2, 0) * embed(s.right.poly, 2, 1));
      add_into(right_shifted, total,
               embed(s.left.poly, 2, 0) * embed(shift(s.right.poly, a), 2, 1));
    }
    if (left_shifted != expected || right_shifted != expected) return false;
  }
  return true;
}

namespace {

// f(slope*x + intercept) by Horner.
UniPoly sub_linear(const UniPoly& f, int slope, int intercept) {
  UniPoly lin = UniPoly::from_coeffs({Rational(intercept), Rational(slope)});
  UniPoly acc;
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * lin + UniPoly(f.coeff(k));
  }
  return acc;
}

}  // namespace

WeylElement antipode(const WeylElement& d, const NumericalSemigroup& a) {
  if (!a.is_symmetric()) {
    throw NotSymmetric("antipode requires a symmetric semigroup, got " +
                       a.str());
  }
  SemigroupPair pair = SemigroupPair::diagonal(a);
  if (!is_member(d, pair)) {
    throw NotMember("operator " + d.str() + " is not a member over " +
                    pair.str());
  }
  const int fr = a.frobenius();
  WeylElement out;
  for (const auto& [deg, f] : d.terms()) {
    out = out + WeylElement::from_term(sub_linear(f, -1, fr - deg), deg);
  }
  return out;
}

LaurentPoly right_augmentation(const WeylElement& d,
                               const NumericalSemigroup& a) {
  return counit(antipode(d, a), SemigroupPair::diagonal(a));
}

NormalForm translation_normal_form(const WeylElement& d) {
  NormalForm out;
  for (const auto& [deg, f] : d.terms()) {
    out.add_component(deg,
                      compose_affine(f, AffineForm{{{0, 1}, {1, -1}}, -deg}, 2));
  }
  return out;
}

NormalForm galois_map(const NormalForm& f) {
  NormalForm out;
  for (const auto& [deg, comp] : f.components) {
    const std::vector<AffineForm> images{{{{0, 1}, {1, 1}}, deg},
                                         {{{1, 1}}, 0}};
    out.add_component(deg, substitute_affine(comp, images, 2));
  }
  return out;
}

NormalForm galois_inverse(const NormalForm& f) {
  NormalForm out;
  for (const auto& [deg, comp] : f.components) {
    const std::vector<AffineForm> images{{{{0, 1}, {1, -1}}, -deg},
                                         {{{1, 1}}, 0}};
    out.add_component(deg, substitute_affine(comp, images, 2));
  }
  return out;
}

NormalForm translation_presentation_image(const TensorPresentation& p) {
  NormalForm out;
  for (const auto& s : p.summands) {
    out.add_component(s.left.deg + s.right.deg,
                      embed(shift(s.left.poly, -s.left.deg), 2, 0) *
                          embed(s.right.poly, 2, 1));
  }
  return out;
}

namespace {

// G_m (m variables) -> G_{m+1}: substitute x1+x2 into the first slot and
// subtract both single-variable faces.
MultiPoly reduced_iterate(const MultiPoly& g) {
  const int m = g.nvars();
  std::vector<AffineForm> merged(static_cast<std::size_t>(m));
  std::vector<AffineForm> face_first(static_cast<std::size_t>(m));
  std::vector<AffineForm> face_second(static_cast<std::size_t>(m));
  merged[0] = AffineForm{{{0, 1}, {1, 1}}, 0};
  face_first[0] = AffineForm{{{1, 1}}, 0};   // keep x2
  face_second[0] = AffineForm{{{0, 1}}, 0};  // keep x1
  for (int i = 1; i < m; ++i) {
    AffineForm shifted{{{i + 1, 1}}, 0};
    merged[static_cast<std::size_t>(i)] = shifted;
    face_first[static_cast<std::size_t>(i)] = shifted;
    face_second[static_cast<std::size_t>(i)] = shifted;
  }
  return substitute_affine(g, merged, m + 1) -
         substitute_affine(g, face_first, m + 1) -
         substitute_affine(g, face_second, m + 1);
}

}  // namespace

int conilpotency_index(const WeylElement& d, const SemigroupPair& pair) {
  (void)pair;  // index is computed in the ambient normal form
  int index = 0;
  for (const auto& [deg, f] : d.terms()) {
    UniPoly reduced = f - UniPoly(f.evaluate(Rational(0)));
    if (reduced.is_zero()) continue;
    MultiPoly g = embed(reduced, 1, 0);
    int n = 1;
    while (true) {
      MultiPoly next = reduced_iterate(g);
      if (next.is_zero()) break;
      g = next;
      ++n;
      assert(n <= reduced.degree() + 1 && "iterate failed to vanish");
    }
    index = std::max(index, n);
  }
  return index;
}

}  // namespace monodiff
