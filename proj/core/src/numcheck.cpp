#include "liouv/numcheck.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "liouv/errors.hpp"

namespace liouv {

namespace {

constexpr double kPathEps = 1e-6;
constexpr double kOrbitEps = 1e-3;
constexpr long kMaxPanels = 20000;
constexpr double kRoundoff = 1e-14;
constexpr int kScreenSamples = 256;

// Polynomials whose zeros make R singular or non-smooth.
std::vector<Poly2> singular_curves(const IntegratingFactor& R) {
  std::vector<Poly2> out;
  for (const auto& f : R.Qfactors) out.push_back(f.v);
  for (const auto& f : R.Sfactors) out.push_back(f.v);
  return out;
}

std::string where(double x, double y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

// Adaptive bisection on 15-point Gauss-Kronrod panels until every panel's
// error estimate is below its share of absTol, or at the roundoff level of
// the panel's value. Running out of panels means the integrand is too wild
// to trust, which is reported as a singular path.
double integrate(const std::function<double(double)>& f, double a, double b, double absTol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  if (a == b) return 0;
  const double total = std::fabs(b - a);
  struct Panel {
    double lo, hi;
    int depth;
  };
  std::vector<Panel> todo{{a, b, 0}};
  double sum = 0;
  long panels = 0;
  while (!todo.empty()) {
    Panel p = todo.back();
    todo.pop_back();
    if (++panels > kMaxPanels) throw PathSingular("quadrature did not converge on the path");
    double err = 0;
    double l1 = 0;
    const double v = GK::integrate(f, p.lo, p.hi, 0, 0.0, &err, &l1);
    const double share = absTol * std::fabs(p.hi - p.lo) / total;
    if (err <= share || err <= kRoundoff * l1 || p.depth >= 40) {
      sum += v;
      continue;
    }
    const double mid = 0.5 * (p.lo + p.hi);
    todo.push_back({p.lo, mid, p.depth + 1});
    todo.push_back({mid, p.hi, p.depth + 1});
  }
  return sum;
}

// Rejects an axis-parallel segment that approaches or crosses a singular curve.
void screen_segment(const std::vector<Poly2>& curves, Point a, Point b) {
  for (const auto& v : curves) {
    double prev = 0;
    for (int k = 0; k <= kScreenSamples; ++k) {
      const double t = static_cast<double>(k) / kScreenSamples;
      const double x = a.x + t * (b.x - a.x);
      const double y = a.y + t * (b.y - a.y);
      const double val = eval(v, x, y);
      if (std::fabs(val) < kPathEps) {
        throw PathSingular("path meets " + to_string(v) + " = 0 near " + where(x, y));
      }
      if (k > 0 && (val > 0) != (prev > 0)) {
        throw PathSingular("path crosses " + to_string(v) + " = 0 near " + where(x, y));
      }
      prev = val;
    }
  }
}

double guarded_R(const IntegratingFactor& R, double x, double y) {
  try {
    return eval_R(R, x, y);
  } catch (const SingularPoint& e) {
    throw PathSingular(e.what());
  }
}

// Integral of R*M dx along y = y0 from x0 to x1.
double horizontal(const IntegratingFactor& R, const DOperator& D, double y0, double x0,
                  double x1, double absTol) {
  return integrate([&](double x) { return guarded_R(R, x, y0) * eval(D.M(), x, y0); }, x0, x1,
                   absTol);
}

// Integral of R*N dy along x = x0 from y0 to y1.
double vertical(const IntegratingFactor& R, const DOperator& D, double x0, double y0, double y1,
                double absTol) {
  return integrate([&](double y) { return guarded_R(R, x0, y) * eval(D.N(), x0, y); }, y0, y1,
                   absTol);
}

}  // namespace

double eval_R(const IntegratingFactor& R, double x, double y) {
  double logAbs = 0;
  bool negative = false;
  if (!R.P.is_zero()) {
    const double q = eval(R.Q(), x, y);
    if (q == 0) throw SingularPoint("Q vanishes at " + where(x, y));
    logAbs += eval(R.P, x, y) / q;
  }
  for (const auto& f : R.Sfactors) {
    const double v = eval(f.v, x, y);
    if (v == 0) throw SingularPoint(to_string(f.v) + " vanishes at " + where(x, y));
    const double c = f.c.get_d();
    logAbs += c * std::log(std::fabs(v));
    if (v < 0 && is_integer(f.c) && mpz_odd_p(f.c.get_num_mpz_t())) negative = !negative;
  }
  const double r = std::exp(logAbs);
  if (!std::isfinite(r)) throw SingularPoint("R overflows at " + where(x, y));
  return negative ? -r : r;
}

double potential(const IntegratingFactor& R, const DOperator& D, Point base, Point target,
                 double absTol) {
  const Point corner{target.x, base.y};
  const auto curves = singular_curves(R);
  screen_segment(curves, base, corner);
  screen_segment(curves, corner, target);
  return horizontal(R, D, base.y, base.x, target.x, absTol / 2) -
         vertical(R, D, target.x, base.y, target.y, absTol / 2);
}

double path_independence_gap(const IntegratingFactor& R, const DOperator& D, Point a, Point b,
                             double absTol) {
  const double first = potential(R, D, a, b, absTol);
  const Point corner{a.x, b.y};
  const auto curves = singular_curves(R);
  screen_segment(curves, a, corner);
  screen_segment(curves, corner, b);
  const double second = -vertical(R, D, a.x, a.y, b.y, absTol / 2) +
                        horizontal(R, D, b.y, a.x, b.x, absTol / 2);
  return std::fabs(first - second);
}

TrajectoryCheck trajectory_constancy(const DOperator& D, const IntegratingFactor& R, Point base,
                                     double tSpan, int nSamples, double absTol) {
  if (nSamples < 1) throw std::invalid_argument("nSamples must be positive");
  if (tSpan < 0) throw std::invalid_argument("tSpan must be nonnegative");
  const auto curves = singular_curves(R);

  auto check_state = [&](double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y) || std::fabs(x) > 1e8 || std::fabs(y) > 1e8) {
      throw TrajectoryHitSingularity("trajectory escapes to infinity");
    }
    for (const auto& v : curves) {
      if (std::fabs(eval(v, x, y)) < kOrbitEps) {
        throw TrajectoryHitSingularity("trajectory approaches " + to_string(v) + " = 0 at " +
                                       where(x, y));
      }
    }
  };
  check_state(base.x, base.y);

  TrajectoryCheck out;
  out.basePoint = base;
  std::vector<double> times;
  for (int k = 0; k < nSamples; ++k) {
    times.push_back(nSamples == 1 ? 0.0 : tSpan * k / (nSamples - 1));
  }

  using State = std::array<double, 2>;
  namespace ode = boost::numeric::odeint;
  auto field = [&](const State& s, State& ds, double) {
    ds[0] = eval(D.N(), s[0], s[1]);
    ds[1] = eval(D.M(), s[0], s[1]);
  };
  auto stepper = ode::make_dense_output(1e-12, 1e-10, ode::runge_kutta_dopri5<State>());
  stepper.initialize(State{base.x, base.y}, 0.0, tSpan > 0 ? tSpan / 100 : 1.0);

  std::size_t next = 0;
  long steps = 0;
  while (next < times.size()) {
    if (times[next] <= stepper.current_time()) {
      State s{base.x, base.y};
      if (times[next] > 0) stepper.calc_state(times[next], s);
      out.samplePoints.push_back({s[0], s[1]});
      ++next;
      continue;
    }
    if (++steps > 1000000) throw TrajectoryHitSingularity("integrator stalled");
    stepper.do_step(field);
    const State& s = stepper.current_state();
    check_state(s[0], s[1]);
  }

  for (const auto& p : out.samplePoints) out.integralValues.push_back(potential(R, D, base, p, absTol));
  const double i0 = out.integralValues.front();
  for (double v : out.integralValues) {
    out.maxRelDeviation =
        std::max(out.maxRelDeviation, std::fabs(v - i0) / std::max(1.0, std::fabs(i0)));
  }
  return out;
}

std::optional<Point> default_base_point(const DOperator& D, const IntegratingFactor& R) {
  const double grid[] = {-2, -1.5, -1, -0.5, 0.5, 1, 1.5, 2};
  auto curves = singular_curves(R);
  curves.push_back(D.N());
  std::optional<Point> best;
  for (double x : grid) {
    for (double y : grid) {
      bool ok = true;
      for (const auto& v : curves) ok = ok && std::fabs(eval(v, x, y)) > 1e-3;
      if (!ok) continue;
      if (!best || std::fabs(x) + std::fabs(y) < std::fabs(best->x) + std::fabs(best->y)) {
        best = Point{x, y};
      }
    }
  }
  return best;
}

}  // namespace liouv
