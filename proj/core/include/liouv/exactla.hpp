#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liouv/rational.hpp"

namespace liouv {

/// Dense linear system matrix * x = rhs over the rationals.
struct LinSystem {
  std::vector<std::vector<BigRational>> matrix;
  std::vector<BigRational> rhs;
  std::vector<std::string> unknownNames;

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return unknownNames.size(); }
};

struct LinSolution {
  /// Solution with every free unknown set to zero.
  std::vector<BigRational> particular;
  /// One vector per free unknown (value 1 at that unknown, 0 at the others).
  std::vector<std::vector<BigRational>> nullspaceBasis;
  std::vector<std::string> freeUnknowns;
  std::size_t rank = 0;
};

/// Fraction-free (Bareiss) elimination with pivots chosen as the first
/// nonzero entry in column order. Throws Inconsistent.
LinSolution solve_linear(const LinSystem& sys);
std::optional<LinSolution> try_solve_linear(const LinSystem& sys);

/// The particular solution with every free unknown set to exactly 0.
std::vector<BigRational> zero_free_vars(const LinSolution& sol);

/// matrix * v - rhs.
std::vector<BigRational> residual(const LinSystem& sys, const std::vector<BigRational>& v);

}  // namespace liouv
