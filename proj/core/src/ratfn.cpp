#include "liouv/ratfn.hpp"

#include "liouv/errors.hpp"

namespace liouv {

RationalFn RationalFn::reduce(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RationalFn(Poly2(), Poly2(1));
  Poly2 n = num;
  Poly2 d = den;
  if (!d.is_constant()) {
    Poly2 g = gcd(n, d);
    if (!g.is_constant()) {
      n = divexact(n, g);
      d = divexact(d, g);
    }
  }
  BigRational c = content(d);
  return RationalFn(n * (1 / c), d * (1 / c));
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn::reduce(a.num_ + b.num_, a.den_);
  return RationalFn::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num_.is_zero()) throw DivisionByZero();
  return RationalFn::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn pow(const RationalFn& f, unsigned e) {
  // Powers of coprime polynomials stay coprime.
  return RationalFn::reduce(pow(f.num(), e), pow(f.den(), e));
}

std::string to_string(const RationalFn& f) {
  if (f.den() == Poly2(1)) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace liouv
