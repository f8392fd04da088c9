#include "liouv/darboux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "liouv/errors.hpp"
#include "liouv/groebner.hpp"

namespace liouv {

namespace {

// Joint rational content of M and N, positive.
BigRational joint_content(const Poly2& a, const Poly2& b) {
  BigInteger num = 0;
  BigInteger den = 1;
  for (const Poly2* p : {&a, &b}) {
    for (const auto& [m, c] : p->terms()) {
      num = gcd(num, c.get_num());
      den = lcm(den, c.get_den());
    }
  }
  return make_rational(num, den);
}

}  // namespace

DOperator::DOperator(const Poly2& M, const Poly2& N) {
  if (N.is_zero()) throw ZeroDenominator();
  Poly2 g = gcd(M, N);
  M_ = g.is_constant() ? M : divexact(M, g);
  N_ = g.is_constant() ? N : divexact(N, g);
  BigRational c = joint_content(M_, N_);
  M_ *= 1 / c;
  N_ *= 1 / c;
}

Poly2 DOperator::apply(const Poly2& f) const {
  return N_ * diff(f, Var::X) + M_ * diff(f, Var::Y);
}

Poly2 DOperator::divergence() const { return diff(N_, Var::X) + diff(M_, Var::Y); }

int DOperator::degree() const { return std::max(M_.degree(), N_.degree()); }

std::string DOperator::to_string() const {
  return "w -> (" + liouv::to_string(N_) + ")*(d/dx w) + (" + liouv::to_string(M_) +
         ")*(d/dy w)";
}

DOperator build_operator(const Poly2& M, const Poly2& N) { return DOperator(M, N); }

Poly2 cofactor_of(const DOperator& D, const Poly2& v) {
  if (v.is_constant()) throw std::invalid_argument("cofactor_of requires a non-constant polynomial");
  auto q = try_divexact(D.apply(v), v);
  if (!q) throw NotDarboux();
  return *std::move(q);
}

namespace {

using elim::MPoly;
// Polynomial in x, y whose coefficients are polynomials in the unknowns.
using CoeffPoly = std::map<Monomial, MPoly, GrlexGreater>;

void accumulate(CoeffPoly& into, const Monomial& m, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

}  // namespace

DarbouxSet darboux_with_leading(const DOperator& D, const Monomial& leading,
                                const Deadline& deadline) {
  const int d = static_cast<int>(leading.degree());
  std::vector<Monomial> vmons;
  for (const auto& m : monomials_up_to(d)) {
    if (grlex_compare(m, leading) < 0) vmons.push_back(m);
  }
  const std::size_t nu = vmons.size();
  std::map<Monomial, std::size_t, GrlexGreater> vindex;
  for (std::size_t i = 0; i < nu; ++i) vindex.emplace(vmons[i], i);

  // Coefficient of monomial mu in v = leading + sum u_i vmons[i].
  auto vcoef = [&](const Monomial& mu) -> MPoly {
    if (mu == leading) return MPoly(nu, 1);
    auto it = vindex.find(mu);
    if (it == vindex.end()) return MPoly(nu);
    return MPoly::variable(nu, it->second);
  };

  // D[v] with unknown coefficients.
  CoeffPoly dv;
  const Poly2 dlead = D.apply(Poly2(leading, 1));
  for (const auto& [m, c] : dlead.terms()) accumulate(dv, m, MPoly(nu, c));
  for (std::size_t i = 0; i < nu; ++i) {
    const MPoly ui = MPoly::variable(nu, i);
    const Poly2 dm = D.apply(Poly2(vmons[i], 1));
    for (const auto& [m, c] : dm.terms()) accumulate(dv, m, ui * c);
  }

  // The cofactor coefficients are forced one at a time: the coefficient of
  // nu * leading in lambda * v is lambda_nu plus contributions of larger
  // lambda monomials only.
  std::vector<Monomial> lmons = monomials_up_to(D.cofactor_degree_bound());
  std::sort(lmons.begin(), lmons.end(), GrlexGreater{});
  std::map<Monomial, MPoly, GrlexGreater> lambda;
  for (const auto& ln : lmons) {
    deadline.check();
    const Monomial target = ln * leading;
    MPoly value = dv.count(target) ? dv.at(target) : MPoly(nu);
    for (const auto& [lo, lc] : lambda) {
      if (!lo.divides(target)) continue;
      MPoly vc = vcoef(target / lo);
      if (!vc.is_zero()) value -= lc * vc;
    }
    lambda.emplace(ln, std::move(value));
  }

  // Residual D[v] - lambda v at every other monomial.
  CoeffPoly res = dv;
  for (const auto& [ln, lc] : lambda) {
    if (lc.is_zero()) continue;
    accumulate(res, ln * leading, lc * MPoly(nu, -1));
    for (std::size_t i = 0; i < nu; ++i) {
      accumulate(res, ln * vmons[i], lc * MPoly::variable(nu, i) * BigRational(-1));
    }
  }
  std::vector<MPoly> eqs;
  for (auto& [m, c] : res) {
    if (!c.is_zero()) eqs.push_back(std::move(c));
  }

  elim::RationalPoints pts = elim::rational_points(eqs, nu, deadline);
  DarbouxSet out;
  out.complete = pts.complete;
  for (const auto& p : pts.points) {
    Poly2 v(leading, 1);
    for (std::size_t i = 0; i < nu; ++i) v.add_term(vmons[i], p[i]);
    v = normalize(v);
    out.pairs.push_back({v, cofactor_of(D, v)});
  }
  return out;
}

DarbouxSet find_darboux(const DOperator& D, int maxDeg, const Deadline& deadline, int cap) {
  if (maxDeg < 1) throw std::invalid_argument("Darboux degree must be at least 1");
  if (maxDeg > cap) throw DegreeTooLarge(maxDeg, cap);

  DarbouxSet result;
  for (int d = 1; d <= maxDeg; ++d) {
    std::vector<DarbouxPair> found;
    for (int i = d; i >= 0; --i) {
      Monomial leading{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)};
      DarbouxSet part = darboux_with_leading(D, leading, deadline);
      result.complete = result.complete && part.complete;
      for (auto& pr : part.pairs) {
        bool reducible = std::any_of(result.pairs.begin(), result.pairs.end(),
                                     [&](const DarbouxPair& lower) {
                                       return try_divexact(pr.v, lower.v).has_value();
                                     });
        if (!reducible) found.push_back(std::move(pr));
      }
    }
    result.pairs.insert(result.pairs.end(), found.begin(), found.end());
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const DarbouxPair& a, const DarbouxPair& b) {
              if (a.v.degree() != b.v.degree()) return a.v.degree() < b.v.degree();
              return canonical_compare(a.v, b.v) < 0;
            });
  result.pairs.erase(std::unique(result.pairs.begin(), result.pairs.end()), result.pairs.end());
  return result;
}

}  // namespace liouv
