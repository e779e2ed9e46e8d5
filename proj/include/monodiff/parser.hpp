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

#ifndef MONODIFF_PARSER_HPP_
#define MONODIFF_PARSER_HPP_

#include <string>
#include <vector>

#include "monodiff/rational.hpp"
#include "monodiff/weyl.hpp"

namespace monodiff {

// Surface syntax for operators.
//
//   expr   := [-] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" signed-int)*
//   atom   := INT | INT "/" INT | "t" | "D0" | "partial"
//           | "L" "(" signed-int ")" | "(" expr ")"
//
// "t" is the shift generator, "D0" the Euler operator x, "partial" the
// derivative x t^(-1), and "L(d)" resolves to ell(d) t^d for the pair the
// expression is evaluated against.
struct OperatorExpr {
  enum class Kind {
    Number,   // value
    T,        // t
    D0,       // x
    Partial,  // x t^(-1)
    L,        // arg = t-degree d
    Neg,      // children[0]
    Add,      // children[0] + children[1]
    Sub,      // children[0] - children[1]
    Mul,      // children[0] * children[1]
    Pow,      // children[0] ^ arg
  };

  Kind kind = Kind::Number;
  Rational value;
  int arg = 0;
  std::vector<OperatorExpr> children;
};

// Throws SyntaxError (with byte offset) on malformed input.
OperatorExpr parse(const std::string& text);

// Canonical text; parse(print(e)) reproduces e, and printing a parsed
// string is idempotent.
std::string print(const OperatorExpr& e);

// Evaluates in the crossed product; L(d) atoms resolve against the pair.
// Negative powers require an invertible operator (a term c t^k), else
// BadIndex. Membership in the subalgebra of the pair is not enforced here;
// callers check is_member where the context demands it.
WeylElement evaluate(const OperatorExpr& e, const SemigroupPair& pair);

}  // namespace monodiff

#endif  // MONODIFF_PARSER_HPP_
