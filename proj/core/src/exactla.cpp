#include "liouv/exactla.hpp"

#include <stdexcept>

#include "liouv/errors.hpp"

namespace liouv {

std::optional<LinSolution> try_solve_linear(const LinSystem& sys) {
  const std::size_t rows = sys.rows();
  const std::size_t cols = sys.cols();
  if (sys.rhs.size() != rows) throw std::invalid_argument("rhs length differs from row count");
  for (const auto& r : sys.matrix) {
    if (r.size() != cols) throw std::invalid_argument("row length differs from unknown count");
  }

  // Augmented integer matrix; each row is scaled by the lcm of its denominators.
  std::vector<std::vector<BigInteger>> a(rows, std::vector<BigInteger>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInteger l = 1;
    for (const auto& v : sys.matrix[i]) l = lcm(l, v.get_den());
    l = lcm(l, sys.rhs[i].get_den());
    for (std::size_t j = 0; j < cols; ++j) {
      BigRational s = sys.matrix[i][j] * l;
      a[i][j] = s.get_num();
    }
    BigRational s = sys.rhs[i] * l;
    a[i][cols] = s.get_num();
  }

  std::vector<std::size_t> pivotCols;
  BigInteger prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        BigInteger t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivotCols.push_back(c);
    ++r;
  }
  const std::size_t rank = r;
  for (std::size_t i = rank; i < rows; ++i) {
    if (a[i][cols] != 0) return std::nullopt;
  }

  std::vector<bool> isPivot(cols, false);
  for (auto c : pivotCols) isPivot[c] = true;

  // Back substitution in plain rationals; free unknowns fixed by `freeValue`.
  auto backsolve = [&](bool homogeneous, std::size_t freeCol) {
    std::vector<BigRational> x(cols, 0);
    if (homogeneous) x[freeCol] = 1;
    for (std::size_t k = rank; k-- > 0;) {
      const std::size_t c = pivotCols[k];
      BigRational s = homogeneous ? BigRational(0) : BigRational(a[k][cols]);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[k][j] != 0 && x[j] != 0) s -= BigRational(a[k][j]) * x[j];
      }
      x[c] = s / BigRational(a[k][c]);
    }
    return x;
  };

  LinSolution sol;
  sol.rank = rank;
  sol.particular = backsolve(false, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (isPivot[c]) continue;
    sol.nullspaceBasis.push_back(backsolve(true, c));
    sol.freeUnknowns.push_back(sys.unknownNames[c]);
  }
  return sol;
}

LinSolution solve_linear(const LinSystem& sys) {
  auto s = try_solve_linear(sys);
  if (!s) throw Inconsistent();
  return *std::move(s);
}

std::vector<BigRational> zero_free_vars(const LinSolution& sol) { return sol.particular; }

std::vector<BigRational> residual(const LinSystem& sys, const std::vector<BigRational>& v) {
  std::vector<BigRational> out(sys.rows());
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    BigRational s = -sys.rhs[i];
    for (std::size_t j = 0; j < sys.cols(); ++j) s += sys.matrix[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

}  // namespace liouv
