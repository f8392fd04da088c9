#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "liouv/errors.hpp"

using namespace liouv;
using fixtures::P;

namespace {

template <typename E>
std::size_t error_position(const std::string& text) {
  try {
    parse_ode(text);
  } catch (const E& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

}  // namespace

TEST(ParseOde, AcceptedForms) {
  OdeInput a = parse_ode("dy/dx = y*(1+x)/(x-x*y-y^2+x^2)");
  OdeInput b = parse_ode("y' = y(x)*(1+x)/(x-x*y(x)-y(x)^2+x^2)");
  OdeInput c = parse_ode("(x+1)*y ; x - x*y - y^2 + x^2");
  EXPECT_EQ(a.M, P("x*y + y"));
  EXPECT_EQ(a.N, P("x^2 - x*y - y^2 + x"));
  EXPECT_EQ(a.M, b.M);
  EXPECT_EQ(a.N, b.N);
  EXPECT_EQ(a.M, c.M);
  EXPECT_EQ(a.N, c.N);
  EXPECT_EQ(a.sourceText, "dy/dx = y*(1+x)/(x-x*y-y^2+x^2)");
}

TEST(ParseOde, NormalizesToIntegerCoprimeForm) {
  OdeInput o = parse_ode(fixtures::kParabola);
  EXPECT_EQ(o.M, P("-1 + x + y + 3*y^2"));
  EXPECT_EQ(o.N, P("4*x + 2*y + 2*x*y + 2*y^2 - 2*y^3"));

  OdeInput shared = parse_ode("dy/dx = (x^2 - 1)/(2*x + 2)");
  EXPECT_EQ(shared.M, P("x - 1"));
  EXPECT_EQ(shared.N, P("2"));

  // Lowest term of N is made positive.
  OdeInput flip = parse_ode("x ; -y");
  EXPECT_EQ(flip.M, P("-x"));
  EXPECT_EQ(flip.N, P("y"));

  OdeInput decimals = parse_ode("dy/dx = 0.5*x + 1.25");
  EXPECT_EQ(decimals.M, P("2*x + 5"));
  EXPECT_EQ(decimals.N, P("4"));

  OdeInput zero = parse_ode("dy/dx = 0*x");
  EXPECT_TRUE(zero.M.is_zero());
  EXPECT_EQ(zero.N, P("1"));
}

TEST(ParseOde, OperatorPrecedence) {
  EXPECT_EQ(parse_poly("-x^2"), P("0 - x*x"));
  EXPECT_EQ(parse_poly("2^3^2"), P("512"));
  EXPECT_EQ(parse_poly("x - y - 1"), P("x - (y + 1)"));
  EXPECT_EQ(parse_poly("x/2*y"), P("1/2*x*y"));
  EXPECT_EQ(parse_poly("(x + y)^(2)"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(parse_poly("x^0"), P("1"));
  EXPECT_EQ(to_string(parse_expression("1/x + 1/y")), "(x + y)/(x*y)");
}

TEST(ParseOde, ErrorsCarryPositions) {
  EXPECT_EQ(error_position<UnsupportedFunction>("dy/dx = sin(x)"), 8U);
  EXPECT_EQ(error_position<UnknownSymbol>("dy/dx = a*x + y"), 8U);
  EXPECT_EQ(error_position<NonPolynomialPower>("dy/dx = x^y"), 10U);
  EXPECT_EQ(error_position<NonPolynomialPower>("dy/dx = x^(1/2)"), 12U);
  EXPECT_EQ(error_position<NonPolynomialPower>("dy/dx = x^-1"), 10U);
  EXPECT_EQ(error_position<SyntaxError>("dy/dx = (x + 1"), 14U);
  EXPECT_EQ(error_position<SyntaxError>("dy/dx = x $ y"), 10U);
  EXPECT_EQ(error_position<SyntaxError>("dy/dx x"), 6U);
  EXPECT_EQ(error_position<SyntaxError>("x + y"), 0U);
  EXPECT_EQ(error_position<SyntaxError>("dy/dx = x/0"), 9U);
  EXPECT_EQ(error_position<SyntaxError>("x ; y +"), 7U);
  EXPECT_THROW(parse_ode("x ; 0"), ZeroDenominator);
  EXPECT_THROW(parse_poly("1/x"), SyntaxError);
}

TEST(RenderOde, CanonicalForm) {
  EXPECT_EQ(render_ode(parse_ode(fixtures::kTwoLines)),
            "dy/dx = (x*y + y)/(x^2 - x*y - y^2 + x)");
  EXPECT_EQ(render_ode(parse_ode("dy/dx = 3*x")), "dy/dx = 3*x");
}

TEST(RenderOde, RoundTripOnRandomInputs) {
  std::mt19937 rng(77);
  for (int i = 0; i < 200; ++i) {
    Poly2 M = fixtures::random_poly(rng, 3, 9);
    Poly2 N = fixtures::random_poly(rng, 3, 9);
    if (N.is_zero()) continue;
    OdeInput o = parse_ode(to_string(M) + " ; " + to_string(N));
    OdeInput back = parse_ode(render_ode(o));
    ASSERT_EQ(back.M, o.M) << render_ode(o);
    ASSERT_EQ(back.N, o.N) << render_ode(o);
    EXPECT_TRUE(gcd(o.M, o.N).is_constant() || o.M.is_zero());
  }
}
