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

#ifndef MONODIFF_VERIFY_HPP_
#define MONODIFF_VERIFY_HPP_

#include <vector>

#include "monodiff/weyl.hpp"

namespace monodiff {

// Named golden checks over the cusp <2,3>: counit values, the reference
// coproduct presentations of D0, L(-2), L(-3), antipode values, and the
// defining identities of L(1) and L(-1).
std::vector<IdentityCheck> verify_hopf_goldens();

// The order filtration is not respected by the coproduct: rewriting L(-2)
// over the diagonal cusp pair fails within total degree 2 (the degree-2
// slice is spanned by ell(-2)(x) and ell(-2)(y) only, which misses xy) and
// first succeeds above.
std::vector<IdentityCheck> verify_order_filtration_gap();

// The two corings connecting the cusp <2,3> and its normalisation <1>:
// reference presentations of coproducts of 1, L(-2) (legs (<2,3>,<1>)) and
// of t^2, L(0) (legs (<1>,<2,3>)), plus the sign discrepancy of the
// reference degree-0 formula, reproduced exactly and contrasted with a
// solver-found valid presentation.
std::vector<IdentityCheck> verify_morita_corings();

// tau witnesses for n = 3..8 and the pointwise expansion coefficients
// c_a = -1 on the cusp for a <= 10.
std::vector<IdentityCheck> verify_numeric_witnesses();

// Everything above plus the four generator relations, in order; the
// backing suite of the `verify cusp` command.
std::vector<IdentityCheck> verify_cusp_suite();

}  // namespace monodiff

#endif  // MONODIFF_VERIFY_HPP_
