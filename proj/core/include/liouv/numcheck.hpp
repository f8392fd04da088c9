#pragma once

#include <optional>
#include <vector>

#include "liouv/darboux.hpp"
#include "liouv/integrating_factor.hpp"

namespace liouv {

struct Point {
  double x = 0;
  double y = 0;
};

struct TrajectoryCheck {
  Point basePoint;
  std::vector<Point> samplePoints;
  std::vector<double> integralValues;
  /// max |I_k - I_0| / max(1, |I_0|)
  double maxRelDeviation = 0;
};

/// exp(P/Q) * prod |v|^c, with the sign of v^c restored for integer c.
/// Throws SingularPoint at a zero of Q or of an S-factor, and when the
/// value overflows.
double eval_R(const IntegratingFactor& R, double x, double y);

/// I(target) for the 1-form R*M dx - R*N dy along the path
/// base -> (target.x, base.y) -> target. Throws PathSingular when the path
/// comes within 1e-6 of a zero of Q or an S-factor, crosses one, or R
/// overflows on it.
double potential(const IntegratingFactor& R, const DOperator& D, Point base, Point target,
                 double absTol = 1e-10);

/// Integrates dx/dt = N, dy/dt = M from base for tSpan and evaluates the
/// potential at nSamples equally spaced times. Throws
/// TrajectoryHitSingularity when the orbit gets within 1e-3 of a zero of Q
/// or an S-factor, or escapes to infinity.
TrajectoryCheck trajectory_constancy(const DOperator& D, const IntegratingFactor& R, Point base,
                                     double tSpan, int nSamples, double absTol = 1e-10);

/// Smallest |x| + |y| point of {+-1/2, +-1, +-3/2, +-2}^2 where |N|, |Q|
/// and every |v| exceed 1e-3.
std::optional<Point> default_base_point(const DOperator& D, const IntegratingFactor& R);

/// |I_1 - I_2| for the two L-shaped paths from a to b, horizontal leg first
/// and vertical leg first.
double path_independence_gap(const IntegratingFactor& R, const DOperator& D, Point a, Point b,
                             double absTol = 1e-10);

}  // namespace liouv
