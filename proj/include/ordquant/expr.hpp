#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordquant/coefficient.hpp"
#include "ordquant/operator_poly.hpp"
#include "ordquant/phase_poly.hpp"

namespace ordquant {

// Grammar (ASCII, whitespace-insensitive, no implicit multiplication):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := var | const | '(' expr ')' | '-' factor
//
//   var    := q | p | qN | pN                  phase-space expressions
//           | Q | P | QN | PN | a | ad | aN | adN   operator expressions
//   const  := i | hbar | shbar | uint | uint/uint | decimal
//
// Modes are numbered from 1; q, p, Q, P, a and ad name mode 1. shbar is
// sqrt(hbar/2). The constants hbar and shbar also accept a negative integer
// exponent (hbar^-1).

struct Token {
  enum class Kind { identifier, number, op, lparen, rparen, caret, end };
  Kind kind;
  std::string lexeme;
  std::size_t offset;
};

/// Splits text into tokens; throws ParseError on a character outside the
/// grammar. The final token has kind end and offset text.size().
std::vector<Token> tokenize(std::string_view text);

struct ExprSymbol {
  enum class Name { q, p, Q, P, a, ad };
  Name name;
  std::uint32_t mode = 0;
};

struct ExprConstant {
  enum class Name { i, hbar, shbar, number };
  Name name;
  Rational value;
};

struct ExprAst {
  enum class Node { sum, product, power, negation, variable, constant };
  Node node;
  std::size_t offset = 0;
  std::vector<ExprAst> children;
  long exponent = 0;
  ExprSymbol symbol{};
  ExprConstant constant{};
};

enum class ExprDomain { phase, operator_ };

/// Parses text into a syntax tree. Symbols from the other domain raise a
/// positioned mode error.
ExprAst parse_ast(std::string_view text, ExprDomain domain);

/// Expands to a canonical exact polynomial.
PhasePoly parse_phase_expr(std::string_view text);

/// Builds the operator polynomial with factor order preserved.
OperatorPoly parse_operator_expr(std::string_view text);

/// Phase if the text names any of q/p, operator if it names Q/P/a/ad,
/// phase for constant-only text. Does not validate the rest of the grammar.
ExprDomain classify_expr(std::string_view text);

/// Deterministic text in the grammar above; parse(render(x)) == x.
std::string render(const PhasePoly& f);
std::string render(const OperatorPoly& x);

}  // namespace ordquant
