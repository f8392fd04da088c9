#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "liouv/rational.hpp"

namespace liouv {

enum class Var { X, Y };

/// x^dx * y^dy.
struct Monomial {
  std::uint32_t dx = 0;
  std::uint32_t dy = 0;

  constexpr std::uint32_t degree() const { return dx + dy; }
  constexpr bool operator==(const Monomial&) const = default;

  /// True when this monomial divides `other`.
  constexpr bool divides(const Monomial& other) const {
    return dx <= other.dx && dy <= other.dy;
  }
  constexpr Monomial operator*(const Monomial& o) const {
    return {dx + o.dx, dy + o.dy};
  }
  /// Requires divisor.divides(*this).
  constexpr Monomial operator/(const Monomial& divisor) const {
    return {dx - divisor.dx, dy - divisor.dy};
  }
};

/// Graded lexicographic order with x > y.
constexpr std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.dx <=> b.dx;
}

struct GrlexGreater {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

/// All monomials of total degree <= maxDegree, ordered by ascending degree
/// and, inside one degree, by descending power of x: 1, x, y, x^2, x*y, ...
std::vector<Monomial> monomials_up_to(int maxDegree);

/// Sparse polynomial in x, y with exact rational coefficients. Terms are
/// stored in descending grlex order; no stored coefficient is zero.
class Poly2 {
 public:
  using TermMap = std::map<Monomial, BigRational, GrlexGreater>;

  Poly2() = default;
  Poly2(const BigRational& constant);  // NOLINT: implicit by design of the algebra
  Poly2(long constant) : Poly2(BigRational(constant)) {}  // NOLINT
  Poly2(const Monomial& m, const BigRational& c);

  static Poly2 x() { return Poly2(Monomial{1, 0}, 1); }
  static Poly2 y() { return Poly2(Monomial{0, 1}, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(Var v) const;

  BigRational coeff(const Monomial& m) const;
  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const BigRational& leading_coeff() const { return terms_.begin()->second; }

  /// Adds c * m in place; drops the term when it cancels.
  void add_term(const Monomial& m, const BigRational& c);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const BigRational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const BigRational& c) { return a *= c; }
  friend Poly2 operator*(const BigRational& c, Poly2 a) { return a *= c; }
  Poly2 operator-() const;

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Multiplies every exponent: p(x,y) * x^m.dx * y^m.dy.
  Poly2 shifted(const Monomial& m) const;

 private:
  TermMap terms_;
};

/// Canonical polynomial order: compare term lists from the leading term,
/// smaller monomial first, then smaller coefficient, then shorter list.
std::strong_ordering canonical_compare(const Poly2& a, const Poly2& b);

Poly2 pow(const Poly2& p, unsigned e);
Poly2 diff(const Poly2& p, Var v);

BigRational eval(const Poly2& p, const BigRational& x0, const BigRational& y0);
double eval(const Poly2& p, double x0, double y0);

/// q with a = q*b, or std::nullopt when b does not divide a.
std::optional<Poly2> try_divexact(const Poly2& a, const Poly2& b);
/// Throws NotDivisible, or DivisionByZero for b = 0.
Poly2 divexact(const Poly2& a, const Poly2& b);

/// Positive rational c with p/c an integer polynomial of content 1 and the
/// sign chosen so that p/c has a positive leading coefficient.
BigRational content(const Poly2& p);
/// p scaled to integer coefficients, content 1, positive leading coefficient.
Poly2 normalize(const Poly2& p);

/// Greatest common divisor, normalized. gcd(0, 0) is 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Canonical text: terms in descending grlex order, e.g. "x^2 - x*y + 3".
std::string to_string(const Poly2& p);
std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace liouv
