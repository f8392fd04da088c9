// Bivariate gcd: content/primitive-part split with respect to y, and a
// subresultant pseudo-remainder sequence on the primitive parts with
// coefficients in Q[x].

#include <utility>
#include <vector>

#include "liouv/errors.hpp"
#include "liouv/poly2.hpp"

namespace liouv {
namespace {

// Polynomial in y with coefficients in Q[x]; index = power of y.
using YPoly = std::vector<Poly2>;

YPoly to_ypoly(const Poly2& p) {
  YPoly out(static_cast<std::size_t>(std::max(p.degree_in(Var::Y), 0)) + 1);
  for (const auto& [m, c] : p.terms()) out[m.dy].add_term({m.dx, 0}, c);
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

Poly2 from_ypoly(const YPoly& a) {
  Poly2 r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i].shifted({0, static_cast<std::uint32_t>(i)});
  return r;
}

void trim(YPoly& a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

bool is_zero(const YPoly& a) { return a.size() == 1 && a[0].is_zero(); }

int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

// Remainder of univariate division in Q[x].
Poly2 rem_x(Poly2 a, const Poly2& b) {
  const Monomial& lb = b.leading_monomial();
  while (!a.is_zero() && a.leading_monomial().dx >= lb.dx) {
    Monomial s{a.leading_monomial().dx - lb.dx, 0};
    a -= b.shifted(s) * (a.leading_coeff() / b.leading_coeff());
  }
  return a;
}

// Monic gcd in Q[x].
Poly2 gcd_x(Poly2 a, Poly2 b) {
  while (!b.is_zero()) {
    Poly2 r = rem_x(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (1 / a.leading_coeff());
}

Poly2 content_y(const YPoly& a) {
  Poly2 g;
  for (const auto& c : a) {
    g = gcd_x(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

YPoly divide_coeffs(const YPoly& a, const Poly2& d) {
  YPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(divexact(c, d));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, with deg a >= deg b.
YPoly prem(YPoly a, const YPoly& b) {
  const Poly2& lb = b.back();
  int e = ydeg(a) - ydeg(b) + 1;
  while (!is_zero(a) && ydeg(a) >= ydeg(b)) {
    const Poly2 la = a.back();
    std::size_t shift = static_cast<std::size_t>(ydeg(a) - ydeg(b));
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    if (a.empty()) a.emplace_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    Poly2 f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);

  YPoly A = to_ypoly(a);
  YPoly B = to_ypoly(b);
  Poly2 ca = content_y(A);
  Poly2 cb = content_y(B);
  Poly2 cg = gcd_x(ca, cb);
  A = divide_coeffs(A, ca);
  B = divide_coeffs(B, cb);
  if (ydeg(A) < ydeg(B)) std::swap(A, B);
  if (ydeg(B) == 0) return normalize(cg);

  Poly2 g(1);
  Poly2 h(1);
  while (true) {
    const int delta = ydeg(A) - ydeg(B);
    YPoly R = prem(A, B);
    if (is_zero(R)) break;
    if (ydeg(R) == 0) return normalize(cg);
    A = std::move(B);
    B = divide_coeffs(R, g * pow(h, static_cast<unsigned>(delta)));
    g = A.back();
    if (delta > 0) {
      h = divexact(pow(g, static_cast<unsigned>(delta)),
                   pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  B = divide_coeffs(B, content_y(B));
  return normalize(cg * from_ypoly(B));
}

}  // namespace liouv
