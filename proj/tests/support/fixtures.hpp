#pragma once

#include <random>
#include <string>

#include "liouv/darboux.hpp"
#include "liouv/integrating_factor.hpp"
#include "liouv/odeparse.hpp"
#include "liouv/poly2.hpp"

namespace fixtures {

using namespace liouv;

inline const std::string kTwoLines = "dy/dx = y*(1+x)/(x-x*y-y^2+x^2)";
// (a*x + b)^2*y' + (a*x + b)*y^3 + c*y^2 = 0 with a = b = c = 1.
inline const std::string kAbel = "dy/dx = -y^2*(y*x+y+1)/(x^2+2*x+1)";
inline const std::string kYLine = "dy/dx = y*(1+x)/(x+x^2-y^2)";
inline const std::string kParabola =
    "dy/dx = 1/2*(-1+x+y(x)+3*y(x)^2)/(2*x+y(x)+x*y(x)+y(x)^2-y(x)^3)";
inline const std::string kLiouvillian =
    "dy/dx = -y^2*(-2*y+1-2*x+x^2*y)/(x^2*(-2*x+1-2*y+y^2*x))";
inline const std::string kElementary =
    "dy/dx = (-14*x-14*y-28*x^3+14*y^3+40*x^4-58*x^5-19*x^2*y+30*x^3*y-23*x^2*y^2"
    "+26*x^3*y^2+14*x*y^3+21*x^4*y)/(x*(7*x^2+7*x^3+7*x+7*y+7*x*y+7*y^2+13*x^2*y"
    "+7*x*y^2+13*x^3*y+7*x^4))";

inline DOperator op(const std::string& ode) {
  OdeInput o = parse_ode(ode);
  return build_operator(o.M, o.N);
}

inline Poly2 P(const std::string& s) { return parse_poly(s); }

/// Random polynomial of total degree <= deg with small integer
/// coefficients; each monomial is present with probability `density`.
inline Poly2 random_poly(std::mt19937& rng, int deg, int coeffRange = 5, double density = 0.6) {
  std::uniform_int_distribution<int> coeff(-coeffRange, coeffRange);
  std::bernoulli_distribution keep(density);
  Poly2 p;
  for (const auto& m : monomials_up_to(deg)) {
    if (keep(rng)) p.add_term(m, coeff(rng));
  }
  return p;
}

inline Poly2 random_nonconstant(std::mt19937& rng, int deg, int coeffRange = 5) {
  while (true) {
    Poly2 p = random_poly(rng, deg, coeffRange);
    if (!p.is_constant()) return p;
  }
}

inline BigRational random_rational(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  return make_rational(num(rng), den(rng));
}

}  // namespace fixtures
