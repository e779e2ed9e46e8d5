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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monodiff/laurent.hpp"
#include "monodiff/multipoly.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/unipoly.hpp"
#include "monodiff/weyl.hpp"

namespace monodiff {

// Image of a two-leg tensor inside the two-variable crossed product: a
// finite map of degrees d to two-variable polynomials F_d(x, y), meaning
// sum_d F_d(x,y) t^d. No zero components are stored.
struct NormalForm {
  std::map<int, MultiPoly> components;

  void add_component(int d, const MultiPoly& f);
  bool is_zero() const { return components.empty(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.components == b.components;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }

  // "(x + y) # 1 + (...) # t^-2" style text, ascending degrees.
  std::string str() const;
};

// Which of the two corings built from a semigroup pair a presentation lives
// in. A: legs are (source -> target) operators, tensor over the target
// coordinate ring. B: legs are the reversed (target -> source) operators,
// tensor over the source coordinate ring.
enum class BaseRing { A, B };

struct TensorLeg {
  UniPoly poly;
  int deg = 0;
};

struct TensorSummand {
  TensorLeg left;
  TensorLeg right;
};

// Presentation of a tensor as an explicit sum of leg pairs
// (g_i t^(d_i)) (x) (h_i t^(e_i)).
struct TensorPresentation {
  SemigroupPair pair;
  BaseRing base = BaseRing::A;
  std::vector<TensorSummand> summands;

  // Pair the legs are members of (tag A keeps the pair, tag B reverses it).
  SemigroupPair leg_pair() const {
    if (base == BaseRing::A) return pair;
    return SemigroupPair{pair.target, pair.source};
  }
  // Max over summands of deg(g_i) + deg(h_i); -1 when empty.
  int total_degree() const;
};

// D applied to 1: sum_d f_d(0) t^d. Requires membership over the pair; a
// member's image always lies in the target span, so CounitEscapesBase
// signals an internal inconsistency.
LaurentPoly counit(const WeylElement& d, const SemigroupPair& pair);

// Degreewise substitution x -> x + y: component d is f_d(x+y).
NormalForm coproduct_normal_form(const WeylElement& d);

// sum_i g_i(x) h_i(y) t^(d_i+e_i), grouped by total degree; legs must be
// members of the presentation's coring (else LegNotMember).
NormalForm presentation_image(const TensorPresentation& p);

struct ValidationReport {
  // (left membership, right membership) per summand.
  std::vector<std::pair<bool, bool>> summand_legs;
  bool legs_ok = false;
  // Image equals the coproduct normal form of the operator.
  bool image_matches = false;
  // Product rule on a grid: sum_i (g_i t^(d_i))(t^a) * (h_i t^(e_i))(t^b)
  // equals D(t^(a+b)) for all grid points (a, b).
  bool leibniz_matches = false;

  bool checks_agree() const { return image_matches == leibniz_matches; }
  bool valid() const { return legs_ok && image_matches && leibniz_matches; }
};

ValidationReport validate_presentation(const TensorPresentation& p,
                                       const WeylElement& d);

// Finds a presentation of the coproduct of D by iterative deepening on the
// total summand degree N: candidates x^p ell(d1)(x) (x) y^q ell(e1)(y) over
// all degree splits d1 + e1 = d, matched against f_d(x+y) by exact linear
// solve. Deterministic: splits ordered by |2 d1 - d| then d1, monomials
// graded-lex descending, first consistent level wins, free variables zeroed.
// max_degree caps N (default: deg f_d + 2 (frobenius sum + 8)); exhaustion
// throws NoPresentationWithinBound, non-membership NotMember.
TensorPresentation rewrite_coproduct(const WeylElement& d,
                                     const SemigroupPair& pair, BaseRing base,
                                     std::optional<int> max_degree = {});

// Coassociativity of a valid presentation: expanding either leg with the
// coproduct yields f_d(x+y+z) on both sides.
bool check_coassoc(const WeylElement& d, const TensorPresentation& p);

// Swapped legs are still members and give the x<->y mirrored image, which
// must equal the original image.
bool check_cocommutative(const TensorPresentation& p);

// Setting x = 0 (resp. y = 0) in the image recovers f_d(y) (resp. f_d(x)).
bool check_counit_laws(const TensorPresentation& p, const WeylElement& d);

// For every generator a of the base semigroup, shifting x by a in the image
// equals shifting y by a (both equal f_d(x+y+a)).
bool check_takeuchi(const TensorPresentation& p, const WeylElement& d);

// S(f t^d) = f(F - d - x) t^d where F is the Frobenius number; defined for
// symmetric semigroups only (else NotSymmetric); requires membership over
// the diagonal pair (else NotMember). An involution and an
// anti-homomorphism; the degree-n part of the leading coefficient scales by
// (-1)^n.
WeylElement antipode(const WeylElement& d, const NumericalSemigroup& a);

// counit(antipode(D)) = sum_d f_d(F - d) t^d.
LaurentPoly right_augmentation(const WeylElement& d,
                               const NumericalSemigroup& a);

// Coordinates of the two-sided translation tensor of D: component d is
// f_d(x - y - d). In translation coordinates the left leg is read with
// t-powers on the right (a stored leg g t^(d1) contributes g(x - d1)) while
// the right leg contributes h(y) as stored; this is the reading invariant
// under sliding a power of t across the tensor sign from the left leg to
// the right one.
NormalForm translation_normal_form(const WeylElement& d);

// Galois map: F_d(x, y) -> F_d(x + y + d, y); takes translation coordinates
// to coproduct-side coordinates.
NormalForm galois_map(const NormalForm& f);
// Inverse: F_d(x, y) -> F_d(x - y - d, y).
NormalForm galois_inverse(const NormalForm& f);

// sum_i g_i(x - d_i) h_i(y) t^(d_i + e_i): the image of a presentation
// whose legs are read in translation coordinates.
NormalForm translation_presentation_image(const TensorPresentation& p);

// Solves translation_normal_form(D) = translation image over the diagonal
// pair of A, with the same deterministic core as rewrite_coproduct.
// Applying the Galois map to the result's image gives the image of D (x) 1.
TensorPresentation rewrite_translation(const WeylElement& d,
                                       const NumericalSemigroup& a,
                                       std::optional<int> max_degree = {});

// Smallest n such that the n+1-fold reduced-coproduct iterate of
// D - (counit value) vanishes, computed degreewise in the ambient normal
// form via G_{m+1}(x1..x_{m+1}) = G_m(x1+x2, x3..) - G_m(x2, x3..)
// - G_m(x1, x3..). Primitive elements give 1, zero gives 0; for members it
// agrees with the operator order.
int conilpotency_index(const WeylElement& d, const SemigroupPair& pair);

}  // namespace monodiff
