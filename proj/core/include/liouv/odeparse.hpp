#pragma once

#include <string>
#include <string_view>

#include "liouv/poly2.hpp"
#include "liouv/ratfn.hpp"

namespace liouv {

/// y' = M/N with integer-coefficient M, N, gcd(M, N) = 1, and the lowest
/// term of N (in canonical order) positive.
struct OdeInput {
  std::string sourceText;
  Poly2 M;
  Poly2 N;
};

/// Accepts "dy/dx = <expr>", "y' = <expr>", or "<M-expr> ; <N-expr>".
/// Expressions use x, y (also written y(x)), integer or decimal literals,
/// + - * / ^ and parentheses; ^ takes a nonnegative integer literal.
/// Throws SyntaxError, UnsupportedFunction, NonPolynomialPower or
/// UnknownSymbol, each carrying the offending position.
OdeInput parse_ode(std::string_view text);

/// Parses a bare rational expression in x and y.
RationalFn parse_expression(std::string_view text);

/// Parses an expression that must be a polynomial.
Poly2 parse_poly(std::string_view text);

/// "dy/dx = (M)/(N)", or "dy/dx = M" when N = 1.
std::string render_ode(const OdeInput& o);

}  // namespace liouv
