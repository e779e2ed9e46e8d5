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

#include "monodiff/parser.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "monodiff/errors.hpp"
#include "monodiff/unipoly.hpp"

namespace monodiff {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (digit(c)) {
      std::size_t j = i;
      while (j < s.size() && digit(s[j])) ++j;
      // A '/' between digit runs is a rational literal, the only use of '/'.
      if (j < s.size() && s[j] == '/' && j + 1 < s.size() && digit(s[j + 1])) {
        ++j;
        while (j < s.size() && digit(s[j])) ++j;
      }
      out.push_back({Token::Kind::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (alpha(c)) {
      std::size_t j = i;
      while (j < s.size() && alnum(s[j])) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '^': kind = Token::Kind::Caret; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, s.substr(i, 1), i});
    ++i;
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  OperatorExpr run() {
    OperatorExpr e = parse_expr();
    if (peek().kind != Token::Kind::End) {
      throw SyntaxError("unexpected trailing input", peek().offset);
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) {
      throw SyntaxError("expected " + what, peek().offset);
    }
    return take();
  }

  static OperatorExpr unary(OperatorExpr::Kind kind, OperatorExpr child) {
    OperatorExpr e;
    e.kind = kind;
    e.children.push_back(std::move(child));
    return e;
  }

  static OperatorExpr binary(OperatorExpr::Kind kind, OperatorExpr lhs,
                             OperatorExpr rhs) {
    OperatorExpr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  OperatorExpr parse_expr() {
    bool negate = false;
    if (peek().kind == Token::Kind::Minus) {
      take();
      negate = true;
    } else if (peek().kind == Token::Kind::Plus) {
      take();
    }
    OperatorExpr node = parse_term();
    if (negate) node = unary(OperatorExpr::Kind::Neg, std::move(node));
    while (peek().kind == Token::Kind::Plus ||
           peek().kind == Token::Kind::Minus) {
      bool plus = take().kind == Token::Kind::Plus;
      node = binary(plus ? OperatorExpr::Kind::Add : OperatorExpr::Kind::Sub,
                    std::move(node), parse_term());
    }
    return node;
  }

  OperatorExpr parse_term() {
    OperatorExpr node = parse_factor();
    while (peek().kind == Token::Kind::Star) {
      take();
      node = binary(OperatorExpr::Kind::Mul, std::move(node), parse_factor());
    }
    return node;
  }

  OperatorExpr parse_factor() {
    OperatorExpr node = parse_atom();
    while (peek().kind == Token::Kind::Caret) {
      take();
      OperatorExpr e;
      e.kind = OperatorExpr::Kind::Pow;
      e.arg = parse_signed_int("exponent");
      e.children.push_back(std::move(node));
      node = std::move(e);
    }
    return node;
  }

  int parse_signed_int(const std::string& what) {
    bool negate = false;
    if (peek().kind == Token::Kind::Minus) {
      take();
      negate = true;
    } else if (peek().kind == Token::Kind::Plus) {
      take();
    }
    Token t = expect(Token::Kind::Number, what);
    if (t.text.find('/') != std::string::npos) {
      throw SyntaxError(what + " must be an integer", t.offset);
    }
    try {
      int v = std::stoi(t.text);
      return negate ? -v : v;
    } catch (const std::out_of_range&) {
      throw SyntaxError(what + " out of range", t.offset);
    }
  }

  OperatorExpr parse_atom() {
    Token t = take();
    switch (t.kind) {
      case Token::Kind::Number: {
        OperatorExpr e;
        e.kind = OperatorExpr::Kind::Number;
        e.value = Rational::from_string(t.text);
        return e;
      }
      case Token::Kind::Ident: {
        OperatorExpr e;
        if (t.text == "t") {
          e.kind = OperatorExpr::Kind::T;
        } else if (t.text == "D0") {
          e.kind = OperatorExpr::Kind::D0;
        } else if (t.text == "partial") {
          e.kind = OperatorExpr::Kind::Partial;
        } else if (t.text == "L") {
          e.kind = OperatorExpr::Kind::L;
          expect(Token::Kind::LParen, "'(' after L");
          e.arg = parse_signed_int("t-degree");
          expect(Token::Kind::RParen, "')'");
        } else {
          throw SyntaxError("unknown symbol '" + t.text + "'", t.offset);
        }
        return e;
      }
      case Token::Kind::LParen: {
        OperatorExpr e = parse_expr();
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError("expected an operand", t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Precedence for printing: +/- and unary minus lowest, then *, then ^;
// atoms highest.
int precedence(OperatorExpr::Kind kind) {
  switch (kind) {
    case OperatorExpr::Kind::Add:
    case OperatorExpr::Kind::Sub:
    case OperatorExpr::Kind::Neg:
      return 1;
    case OperatorExpr::Kind::Mul:
      return 2;
    case OperatorExpr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string wrapped(const OperatorExpr& e, int min_precedence) {
  std::string body = print(e);
  // Fractions regrouped under ^ or bare '-' values also need parentheses.
  bool fragile = e.kind == OperatorExpr::Kind::Number &&
                 (!e.value.is_integer() || e.value.sign() < 0);
  if (precedence(e.kind) < min_precedence || (fragile && min_precedence > 2)) {
    return "(" + body + ")";
  }
  return body;
}

}  // namespace

OperatorExpr parse(const std::string& text) { return Parser(lex(text)).run(); }

std::string print(const OperatorExpr& e) {
  switch (e.kind) {
    case OperatorExpr::Kind::Number:
      return e.value.str();
    case OperatorExpr::Kind::T:
      return "t";
    case OperatorExpr::Kind::D0:
      return "D0";
    case OperatorExpr::Kind::Partial:
      return "partial";
    case OperatorExpr::Kind::L:
      return "L(" + std::to_string(e.arg) + ")";
    case OperatorExpr::Kind::Neg:
      return "-" + wrapped(e.children[0], 2);
    case OperatorExpr::Kind::Add:
      return wrapped(e.children[0], 1) + " + " + wrapped(e.children[1], 2);
    case OperatorExpr::Kind::Sub:
      return wrapped(e.children[0], 1) + " - " + wrapped(e.children[1], 2);
    case OperatorExpr::Kind::Mul:
      return wrapped(e.children[0], 2) + "*" + wrapped(e.children[1], 3);
    case OperatorExpr::Kind::Pow:
      return wrapped(e.children[0], 4) + "^" + std::to_string(e.arg);
  }
  return "";  // unreachable
}

WeylElement evaluate(const OperatorExpr& e, const SemigroupPair& pair) {
  switch (e.kind) {
    case OperatorExpr::Kind::Number:
      return e.value.is_zero() ? WeylElement::zero()
                               : WeylElement::t_power(0, e.value);
    case OperatorExpr::Kind::T:
      return WeylElement::t_power(1);
    case OperatorExpr::Kind::D0:
      return WeylElement::euler();
    case OperatorExpr::Kind::Partial:
      return WeylElement::partial();
    case OperatorExpr::Kind::L:
      return generator_L(e.arg, pair);
    case OperatorExpr::Kind::Neg:
      return -evaluate(e.children[0], pair);
    case OperatorExpr::Kind::Add:
      return evaluate(e.children[0], pair) + evaluate(e.children[1], pair);
    case OperatorExpr::Kind::Sub:
      return evaluate(e.children[0], pair) - evaluate(e.children[1], pair);
    case OperatorExpr::Kind::Mul:
      return evaluate(e.children[0], pair) * evaluate(e.children[1], pair);
    case OperatorExpr::Kind::Pow: {
      WeylElement base = evaluate(e.children[0], pair);
      if (e.arg >= 0) return pow(base, e.arg);
      // Only c t^k has an inverse in the crossed product.
      if (base.terms().size() != 1 ||
          base.terms().begin()->second.degree() != 0) {
        throw BadIndex("negative power of a non-invertible operator " +
                       base.str());
      }
      const auto& [k, c] = *base.terms().begin();
      WeylElement inv =
          WeylElement::t_power(-k, Rational(1) / c.coeff(0));
      return pow(inv, -e.arg);
    }
  }
  return WeylElement::zero();  // unreachable
}

}  // namespace monodiff
