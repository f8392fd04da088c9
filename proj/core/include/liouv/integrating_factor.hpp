#pragma once

#include <string>
#include <vector>

#include "liouv/poly2.hpp"

namespace liouv {

struct QFactor {
  Poly2 v;
  unsigned m = 1;
  friend bool operator==(const QFactor&, const QFactor&) = default;
};

struct SFactor {
  Poly2 v;
  BigRational c;
  friend bool operator==(const SFactor&, const SFactor&) = default;
};

/// R = exp(P/Q) * prod v^c with Q = prod v^m, kept in factored form.
struct IntegratingFactor {
  Poly2 P;
  std::vector<QFactor> Qfactors;
  std::vector<SFactor> Sfactors;

  /// Expanded product of the Q factors.
  Poly2 Q() const;

  friend bool operator==(const IntegratingFactor&, const IntegratingFactor&) = default;
};

/// e.g. "exp(x/y)*(x + y)^(-2)"; the constant factor 1 renders as "1".
std::string to_string(const IntegratingFactor& R);

}  // namespace liouv
