#pragma once

#include <string>

#include "liouv/poly2.hpp"

namespace liouv {

/// num/den in lowest terms. The denominator is an integer polynomial of
/// content 1 with a positive leading coefficient; scalars live in num.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(Poly2 p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Throws DivisionByZero when den is zero.
  static RationalFn reduce(const Poly2& num, const Poly2& den);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn operator-() const;

  friend bool operator==(const RationalFn&, const RationalFn&) = default;

 private:
  RationalFn(Poly2 n, Poly2 d) : num_(std::move(n)), den_(std::move(d)) {}

  Poly2 num_;
  Poly2 den_;
};

RationalFn pow(const RationalFn& f, unsigned e);

std::string to_string(const RationalFn& f);

}  // namespace liouv
