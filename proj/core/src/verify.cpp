#include "liouv/verify.hpp"

#include "liouv/errors.hpp"

namespace liouv {

namespace {

Poly2 checked_cofactor(const DOperator& D, const Poly2& v) {
  try {
    return cofactor_of(D, v);
  } catch (const NotDarboux&) {
    throw NotDarbouxFactor(to_string(v));
  }
}

}  // namespace

VerifyResidual check(const DOperator& D, const IntegratingFactor& R, unsigned scale) {
  for (const auto& f : R.Qfactors) checked_cofactor(D, f.v);

  BigInteger k = scale;
  for (const auto& f : R.Sfactors) k = lcm(k, f.c.get_den());
  const BigRational kq(k);

  Poly2 cofactorSum = D.divergence() * kq;
  for (const auto& f : R.Sfactors) cofactorSum += checked_cofactor(D, f.v) * (f.c * kq);

  const Poly2 Q = R.Q();
  const Poly2 quotientRule = Q * D.apply(R.P) - R.P * D.apply(Q);
  return {quotientRule * kq + Q * Q * cofactorSum};
}

}  // namespace liouv
