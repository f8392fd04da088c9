#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "liouv/errors.hpp"
#include "liouv/ratfn.hpp"

using namespace liouv;
using fixtures::P;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), BigRational(-7));
  EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
  EXPECT_TRUE(is_integer(make_rational(4, 2)));
  EXPECT_EQ(lcm(BigInteger(4), BigInteger(6)), 12);
  EXPECT_EQ(gcd(BigInteger(0), BigInteger(-6)), 6);
}

TEST(Monomials, OrderAndEnumeration) {
  auto m = monomials_up_to(2);
  ASSERT_EQ(m.size(), 6U);
  EXPECT_EQ(m[0], (Monomial{0, 0}));
  EXPECT_EQ(m[1], (Monomial{1, 0}));
  EXPECT_EQ(m[2], (Monomial{0, 1}));
  EXPECT_EQ(m[3], (Monomial{2, 0}));
  EXPECT_EQ(m[5], (Monomial{0, 2}));
  EXPECT_TRUE(grlex_compare({0, 2}, {1, 0}) > 0);
  EXPECT_TRUE(grlex_compare({1, 1}, {0, 2}) > 0);
  EXPECT_EQ(monomials_up_to(4).size(), 15U);
}

TEST(Poly2, CanonicalText) {
  EXPECT_EQ(to_string(P("3 - x*y + x^2")), "x^2 - x*y + 3");
  EXPECT_EQ(to_string(P("x^2/2")), "1/2*x^2");
  EXPECT_EQ(to_string(P("-y")), "-y");
  EXPECT_EQ(to_string(Poly2()), "0");
  EXPECT_EQ(to_string(P("-2*x*y^3 + 1/3")), "-2*x*y^3 + 1/3");
}

TEST(Poly2, DegreeAndCoefficients) {
  Poly2 p = P("x^3*y + 2*y^2 - 5");
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.degree_in(Var::X), 3);
  EXPECT_EQ(p.degree_in(Var::Y), 2);
  EXPECT_EQ(p.coeff({0, 2}), 2);
  EXPECT_EQ(p.coeff({1, 1}), 0);
  EXPECT_EQ(Poly2().degree(), -1);
  EXPECT_EQ(p.leading_monomial(), (Monomial{3, 1}));
}

TEST(Poly2, RingLawsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Poly2 a = fixtures::random_poly(rng, 3);
    Poly2 b = fixtures::random_poly(rng, 3);
    Poly2 c = fixtures::random_poly(rng, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(pow(a, 3), a * a * a);
  }
}

TEST(Poly2, DerivativeRules) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly2 a = fixtures::random_poly(rng, 3);
    Poly2 b = fixtures::random_poly(rng, 3);
    for (Var v : {Var::X, Var::Y}) {
      EXPECT_EQ(diff(a * b, v), diff(a, v) * b + a * diff(b, v));
      EXPECT_EQ(diff(a + b, v), diff(a, v) + diff(b, v));
    }
    EXPECT_EQ(diff(diff(a, Var::X), Var::Y), diff(diff(a, Var::Y), Var::X));
  }
  EXPECT_EQ(diff(P("x^3*y^2"), Var::X), P("3*x^2*y^2"));
}

TEST(Poly2, EvaluationMatchesDouble) {
  Poly2 p = P("x^2 - 3*x*y + 1/2");
  EXPECT_EQ(eval(p, BigRational(2), make_rational(1, 3)), make_rational(5, 2));
  EXPECT_DOUBLE_EQ(eval(p, 2.0, 1.0 / 3), 2.5);
}

TEST(Poly2, ExactDivision) {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    Poly2 a = fixtures::random_nonconstant(rng, 3);
    Poly2 b = fixtures::random_nonconstant(rng, 2);
    EXPECT_EQ(divexact(a * b, b), a);
  }
  EXPECT_FALSE(try_divexact(P("x^2 + 1"), P("x + 1")).has_value());
  EXPECT_THROW(divexact(P("x^2 + 1"), P("x + 1")), NotDivisible);
  EXPECT_THROW(divexact(P("x"), Poly2()), DivisionByZero);
}

TEST(Poly2, ContentAndNormalize) {
  EXPECT_EQ(normalize(P("-2/3*x + 4/9*y")), P("3*x - 2*y"));
  EXPECT_EQ(normalize(P("6*x^2 + 4")), P("3*x^2 + 2"));
  EXPECT_EQ(normalize(P("-x")), P("x"));
}

TEST(Gcd, KnownCases) {
  EXPECT_EQ(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")), P("x + y"));
  EXPECT_EQ(gcd(P("x*y"), P("x^2")), P("x"));
  EXPECT_EQ(gcd(P("x + 1"), P("y + 1")), P("1"));
  EXPECT_EQ(gcd(Poly2(), P("2*x - 4")), P("x - 2"));
  EXPECT_TRUE(gcd(Poly2(), Poly2()).is_zero());
  EXPECT_EQ(gcd(P("(y^2 + x)*(x*y + 1)"), P("(y^2 + x)^2*(x - y)")), P("y^2 + x"));
}

// Common factor planted in two random polynomials divides their gcd, and the
// cofactors left over are coprime.
TEST(Gcd, PlantedCommonFactor) {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    Poly2 c = fixtures::random_nonconstant(rng, 2);
    Poly2 a = fixtures::random_nonconstant(rng, 2);
    Poly2 b = fixtures::random_nonconstant(rng, 2);
    Poly2 g = gcd(a * c, b * c);
    ASSERT_TRUE(try_divexact(g, normalize(c)).has_value());
    EXPECT_TRUE(try_divexact(a * c, g).has_value());
    EXPECT_TRUE(try_divexact(b * c, g).has_value());
    EXPECT_TRUE(gcd(divexact(a * c, g), divexact(b * c, g)).is_constant());
  }
}

TEST(RationalFn, LowestTerms) {
  RationalFn f = RationalFn::reduce(P("x^2 - y^2"), P("2*x + 2*y"));
  EXPECT_EQ(f.num(), P("1/2*x - 1/2*y"));
  EXPECT_EQ(f.den(), P("1"));
  RationalFn g = RationalFn(P("1")) / RationalFn(P("x")) + RationalFn(P("1")) / RationalFn(P("y"));
  EXPECT_EQ(g.num(), P("x + y"));
  EXPECT_EQ(g.den(), P("x*y"));
  EXPECT_THROW(RationalFn::reduce(P("1"), Poly2()), DivisionByZero);
  EXPECT_EQ(pow(RationalFn::reduce(P("1"), P("-x")), 2).den(), P("x^2"));
}
