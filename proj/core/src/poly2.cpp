#include "liouv/poly2.hpp"

#include <cmath>
#include <sstream>

#include "liouv/errors.hpp"

namespace liouv {

std::vector<Monomial> monomials_up_to(int maxDegree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= maxDegree; ++d) {
    for (int i = d; i >= 0; --i) {
      out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)});
    }
  }
  return out;
}

Poly2::Poly2(const BigRational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly2::Poly2(const Monomial& m, const BigRational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

int Poly2::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Poly2::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, static_cast<int>(v == Var::X ? m.dx : m.dy));
  }
  return d;
}

BigRational Poly2::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void Poly2::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) { return *this = *this * o; }

Poly2& Poly2::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly2 Poly2::shifted(const Monomial& s) const {
  Poly2 r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * s, c);
  return r;
}

std::strong_ordering canonical_compare(const Poly2& a, const Poly2& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (auto c = grlex_compare(ia->first, ib->first); c != 0) return c;
    if (ia->second != ib->second) {
      return ia->second < ib->second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    }
  }
  return a.size() <=> b.size();
}

Poly2 pow(const Poly2& p, unsigned e) {
  Poly2 result(1);
  Poly2 base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly2 diff(const Poly2& p, Var v) {
  Poly2 r;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = v == Var::X ? m.dx : m.dy;
    if (e == 0) continue;
    Monomial dm = v == Var::X ? Monomial{m.dx - 1, m.dy} : Monomial{m.dx, m.dy - 1};
    r.add_term(dm, c * e);
  }
  return r;
}

BigRational eval(const Poly2& p, const BigRational& x0, const BigRational& y0) {
  BigRational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    BigRational t = c;
    for (std::uint32_t i = 0; i < m.dx; ++i) t *= x0;
    for (std::uint32_t i = 0; i < m.dy; ++i) t *= y0;
    sum += t;
  }
  return sum;
}

double eval(const Poly2& p, double x0, double y0) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    sum += c.get_d() * std::pow(x0, m.dx) * std::pow(y0, m.dy);
  }
  return sum;
}

std::optional<Poly2> try_divexact(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw DivisionByZero();
  Poly2 q;
  Poly2 r = a;
  const Monomial& lb = b.leading_monomial();
  const BigRational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const Monomial lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    const Monomial qm = lr / lb;
    const BigRational qc = r.leading_coeff() / cb;
    q.add_term(qm, qc);
    r -= b.shifted(qm) * qc;
  }
  return q;
}

Poly2 divexact(const Poly2& a, const Poly2& b) {
  auto q = try_divexact(a, b);
  if (!q) throw NotDivisible();
  return *std::move(q);
}

BigRational content(const Poly2& p) {
  if (p.is_zero()) return 1;
  BigInteger num = 0;
  BigInteger den = 1;
  for (const auto& [m, c] : p.terms()) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  BigRational r = make_rational(num, den);
  if (p.leading_coeff() < 0) r = -r;
  return r;
}

Poly2 normalize(const Poly2& p) {
  if (p.is_zero()) return p;
  return p * (1 / content(p));
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  auto factor = [&](char v, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << v;
    if (e > 1) os << '^' << e;
    first = false;
  };
  factor('x', m.dx);
  factor('y', m.dy);
}

}  // namespace

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m == Monomial{}) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    append_monomial(os, m);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << to_string(p); }

}  // namespace liouv
