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

#ifndef MONODIFF_SERIALIZE_HPP_
#define MONODIFF_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "monodiff/hopf.hpp"
#include "monodiff/laurent.hpp"
#include "monodiff/locproj.hpp"
#include "monodiff/multipoly.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/unipoly.hpp"
#include "monodiff/weyl.hpp"

namespace monodiff {

using nlohmann::json;

// JSON shapes (all rationals are exact decimal strings "p" or "p/q"):
//   UniPoly              ["0","-3","1"]            (ascending coefficients)
//   LaurentPoly          [{"e":-2,"c":"4"}, ...]   (ascending exponents)
//   WeylElement          {"terms":[{"d":-2,"poly":[...]}, ...]}
//   IdempotentElement    {"columns":[{"b":2,"poly":[...]}, ...]}
//   TensorPresentation   {"base":"A","summands":[{"left":{"d":..,"poly":[..]},
//                                                 "right":{...}}, ...]}
//   NormalForm           {"components":[{"d":-2,"poly":"x^2 + ..."}, ...]}
json to_json(const UniPoly& f);
json to_json(const LaurentPoly& f);
json to_json(const WeylElement& d);
json to_json(const IdempotentElement& e);
json to_json(const TensorPresentation& p);
json to_json(const NormalForm& f);
json to_json(const ValidationReport& r);

UniPoly unipoly_from_json(const json& j);
WeylElement weyl_from_json(const json& j);
IdempotentElement idempotent_from_json(const json& j);
// The pair is carried outside the presentation shape (e.g. in the CLI
// envelope), so it is supplied by the caller here.
TensorPresentation presentation_from_json(const json& j,
                                          const SemigroupPair& pair);

// ASCII form, one summand per "+": "(x # 1) (x)_A (1 # 1) + ...".
std::string presentation_text(const TensorPresentation& p);

std::string latex(const Rational& r);
std::string latex(const UniPoly& f, const std::string& var = "x");
std::string latex(const MultiPoly& f);
std::string latex(const LaurentPoly& f);
std::string latex(const WeylElement& d);
std::string latex(const TensorPresentation& p);
std::string latex(const NormalForm& f);

}  // namespace monodiff

#endif  // MONODIFF_SERIALIZE_HPP_
