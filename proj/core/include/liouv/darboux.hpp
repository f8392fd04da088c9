#pragma once

#include <string>
#include <vector>

#include "liouv/deadline.hpp"
#include "liouv/poly2.hpp"

namespace liouv {

/// The derivation D = N d/dx + M d/dy attached to y' = M/N. Construction
/// divides out gcd(M, N).
class DOperator {
 public:
  /// Throws ZeroDenominator when N = 0.
  DOperator(const Poly2& M, const Poly2& N);

  const Poly2& M() const { return M_; }
  const Poly2& N() const { return N_; }

  /// N * df/dx + M * df/dy.
  Poly2 apply(const Poly2& f) const;
  /// dN/dx + dM/dy (not negated).
  Poly2 divergence() const;
  /// max(deg M, deg N).
  int degree() const;
  /// Upper bound on the degree of a cofactor: degree() - 1.
  int cofactor_degree_bound() const { return degree() - 1; }

  /// "w -> (N)*(d/dx w) + (M)*(d/dy w)".
  std::string to_string() const;

 private:
  Poly2 M_;
  Poly2 N_;
};

DOperator build_operator(const Poly2& M, const Poly2& N);

/// A Darboux polynomial v with its cofactor: D[v] = lambda * v.
struct DarbouxPair {
  Poly2 v;
  Poly2 lambda;

  friend bool operator==(const DarbouxPair&, const DarbouxPair&) = default;
};

/// Cofactor of v; throws NotDarboux when v does not divide D[v].
Poly2 cofactor_of(const DOperator& D, const Poly2& v);

struct DarbouxSet {
  std::vector<DarbouxPair> pairs;
  /// False when some degree admitted a continuous family of Darboux
  /// polynomials and only representatives were reported.
  bool complete = true;
};

inline constexpr int kDefaultDarbouxDegreeCap = 4;

/// All pairwise non-associate Darboux polynomials of degree 1..maxDeg that
/// are not multiples of a lower-degree one, sorted by degree and then by
/// canonical polynomial order. Throws DegreeTooLarge when maxDeg > cap.
DarbouxSet find_darboux(const DOperator& D, int maxDeg, const Deadline& deadline = {},
                        int cap = kDefaultDarbouxDegreeCap);

/// Darboux polynomials of one exact degree whose leading monomial is
/// `leading`, normalized; no filtering against lower degrees.
DarbouxSet darboux_with_leading(const DOperator& D, const Monomial& leading,
                                const Deadline& deadline = {});

}  // namespace liouv
