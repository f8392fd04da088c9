#pragma once

#include "liouv/darboux.hpp"
#include "liouv/integrating_factor.hpp"

namespace liouv {

/// Numerator of D[P/Q] + sum c_j lambda_j + dN/dx + dM/dy over Q^2 * k,
/// where k clears the denominators of the exponents c_j.
struct VerifyResidual {
  Poly2 residualNum;

  bool valid() const { return residualNum.is_zero(); }
};

/// Exact integrating-factor test; never evaluates exp(P/Q). Throws
/// NotDarbouxFactor when a Q- or S-factor is not a Darboux polynomial of D.
/// `scale` multiplies the denominator-clearing constant k.
VerifyResidual check(const DOperator& D, const IntegratingFactor& R, unsigned scale = 1);

}  // namespace liouv
