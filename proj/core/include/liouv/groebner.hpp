#pragma once

// Multivariate polynomials over Q in a fixed number of variables, Buchberger's
// algorithm for lexicographic Groebner bases, and the search for rational
// points of the resulting triangular systems. Used by the Darboux search to
// solve the nonlinear system in the unknown coefficients.

#include <cstdint>
#include <string>
#include <vector>

#include "liouv/deadline.hpp"
#include "liouv/rational.hpp"

namespace liouv::elim {

using Exponents = std::vector<std::uint16_t>;

struct Term {
  Exponents exp;
  BigRational coeff;
};

/// Lexicographic order on exponent vectors, variable 0 largest.
int lex_compare(const Exponents& a, const Exponents& b);

/// Polynomial with terms sorted in descending lex order.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const BigRational& constant);

  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;

  /// True when only variable `index` occurs (constants included).
  bool is_univariate_in(std::size_t index) const;
  bool involves(std::size_t index) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const BigRational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRational& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// this - c * x^shift * g, in place.
  void subtract_scaled(const MPoly& g, const BigRational& c, const Exponents& shift);

  MPoly substitute(std::size_t index, const BigRational& value) const;
  /// Requires every variable to have a value.
  BigRational eval(const std::vector<BigRational>& point) const;

  void make_monic();

  /// Removes and returns the leading term; requires a nonzero polynomial.
  Term pop_leading();
  /// Appends a term smaller than every stored term.
  void append_smaller(Term t) { terms_.push_back(std::move(t)); }

  /// Coefficients by ascending power of variable `index`; requires
  /// is_univariate_in(index).
  std::vector<BigRational> univariate_coeffs(std::size_t index) const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Reduced lexicographic Groebner basis of the ideal generated by `gens`.
/// Zero generators are ignored; the unit ideal returns {1}.
std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, const Deadline& deadline = {});

/// Remainder of f modulo the polynomial list g.
MPoly normal_form(MPoly f, const std::vector<MPoly>& g);

/// Rational roots of a univariate polynomial given by ascending coefficients,
/// ascending and without repetition. The zero polynomial is rejected.
std::vector<BigRational> rational_roots(const std::vector<BigRational>& coeffs);

struct RationalPoints {
  std::vector<std::vector<BigRational>> points;
  /// False when some unknown was not determined by the system and had to be
  /// pinned to representative values.
  bool complete = true;
};

/// Rational solutions of the system {eqs = 0}. Positive-dimensional
/// components are sampled by fixing undetermined unknowns to 0 and 1 (or,
/// when both fail, to the first of -1, 2, -2, 3 that yields a point).
RationalPoints rational_points(const std::vector<MPoly>& eqs, std::size_t nvars,
                               const Deadline& deadline = {});

}  // namespace liouv::elim
