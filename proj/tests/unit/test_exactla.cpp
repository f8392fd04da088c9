#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "liouv/errors.hpp"
#include "liouv/exactla.hpp"

using namespace liouv;

namespace {

// Textbook Gauss-Jordan on rationals: reduced row echelon form of [A | b].
struct Rref {
  bool consistent = true;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<BigRational>> rows;
};

Rref gauss_jordan(const LinSystem& s) {
  Rref r;
  const std::size_t n = s.cols();
  for (std::size_t i = 0; i < s.rows(); ++i) {
    auto row = s.matrix[i];
    row.push_back(s.rhs[i]);
    r.rows.push_back(row);
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < r.rows.size(); ++col) {
    std::size_t p = lead;
    while (p < r.rows.size() && r.rows[p][col] == 0) ++p;
    if (p == r.rows.size()) continue;
    std::swap(r.rows[p], r.rows[lead]);
    BigRational inv = 1 / r.rows[lead][col];
    for (auto& v : r.rows[lead]) v *= inv;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (i == lead || r.rows[i][col] == 0) continue;
      BigRational f = r.rows[i][col];
      for (std::size_t j = 0; j <= n; ++j) r.rows[i][j] -= f * r.rows[lead][j];
    }
    r.pivots.push_back(col);
    ++lead;
  }
  for (std::size_t i = lead; i < r.rows.size(); ++i) {
    if (r.rows[i][n] != 0) r.consistent = false;
  }
  return r;
}

LinSystem random_system(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  LinSystem s;
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> v(-4, 4);
  for (std::size_t j = 0; j < cols; ++j) s.unknownNames.push_back("u" + std::to_string(j));
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<BigRational> row;
    for (std::size_t j = 0; j < cols; ++j) {
      row.push_back(keep(rng) ? make_rational(v(rng), 1 + (v(rng) + 4) % 3) : BigRational(0));
    }
    s.matrix.push_back(row);
    s.rhs.push_back(keep(rng) ? BigRational(v(rng)) : BigRational(0));
  }
  return s;
}

bool all_zero(const std::vector<BigRational>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST(ExactLa, AgreesWithGaussJordanOracle) {
  std::mt19937 rng(2024);
  int solved = 0;
  int inconsistent = 0;
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    LinSystem s = random_system(rng, dim(rng), dim(rng), 0.5);
    Rref oracle = gauss_jordan(s);
    auto sol = try_solve_linear(s);
    ASSERT_EQ(sol.has_value(), oracle.consistent);
    if (!sol) {
      ++inconsistent;
      EXPECT_THROW(solve_linear(s), Inconsistent);
      continue;
    }
    ++solved;
    EXPECT_EQ(sol->rank, oracle.pivots.size());
    EXPECT_EQ(sol->nullspaceBasis.size(), s.cols() - oracle.pivots.size());
    EXPECT_TRUE(all_zero(residual(s, sol->particular)));
    // Same particular solution: the oracle's with free unknowns at zero.
    std::vector<BigRational> expect(s.cols(), 0);
    for (std::size_t i = 0; i < oracle.pivots.size(); ++i) {
      expect[oracle.pivots[i]] = oracle.rows[i][s.cols()];
    }
    EXPECT_EQ(zero_free_vars(*sol), expect);
  }
  EXPECT_GT(solved, 50);
  EXPECT_GT(inconsistent, 20);
}

// particular + sum t_k * basis_k stays a solution for random t.
TEST(ExactLa, NullspacePerturbation) {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    LinSystem s = random_system(rng, 4, 7, 0.6);
    auto sol = try_solve_linear(s);
    if (!sol) continue;
    for (const auto& b : sol->nullspaceBasis) {
      std::vector<BigRational> zero(s.rhs.size(), 0);
      LinSystem hom = s;
      hom.rhs = zero;
      EXPECT_TRUE(all_zero(residual(hom, b)));
    }
    std::vector<BigRational> x = sol->particular;
    for (const auto& b : sol->nullspaceBasis) {
      BigRational k = fixtures::random_rational(rng);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += k * b[j];
    }
    EXPECT_TRUE(all_zero(residual(s, x)));
  }
}

TEST(ExactLa, FreeUnknownNamesAndSmallCases) {
  LinSystem s;
  s.unknownNames = {"a", "b", "c"};
  s.matrix = {{BigRational(1), BigRational(1), BigRational(0)},
              {BigRational(0), BigRational(0), BigRational(2)}};
  s.rhs = {BigRational(3), BigRational(1)};
  LinSolution sol = solve_linear(s);
  EXPECT_EQ(sol.rank, 2U);
  ASSERT_EQ(sol.freeUnknowns.size(), 1U);
  EXPECT_EQ(sol.freeUnknowns[0], "b");
  EXPECT_EQ(sol.particular, (std::vector<BigRational>{3, 0, make_rational(1, 2)}));
  EXPECT_EQ(sol.nullspaceBasis[0], (std::vector<BigRational>{-1, 1, 0}));

  LinSystem bad;
  bad.unknownNames = {"a"};
  bad.matrix = {{BigRational(0)}};
  bad.rhs = {BigRational(1)};
  EXPECT_FALSE(try_solve_linear(bad).has_value());

  LinSystem empty;
  empty.unknownNames = {"a", "b"};
  LinSolution e = solve_linear(empty);
  EXPECT_EQ(e.rank, 0U);
  EXPECT_EQ(e.nullspaceBasis.size(), 2U);
}

// Bareiss keeps intermediate integers exact; a Hilbert matrix is a stress test.
TEST(ExactLa, HilbertSystem) {
  const std::size_t n = 8;
  LinSystem s;
  for (std::size_t j = 0; j < n; ++j) s.unknownNames.push_back("h" + std::to_string(j));
  std::vector<BigRational> ones(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRational> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(make_rational(1, static_cast<long>(i + j + 1)));
    s.matrix.push_back(row);
  }
  // rhs = H * 1
  s.rhs = std::vector<BigRational>(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.rhs[i] += s.matrix[i][j];
  }
  EXPECT_EQ(solve_linear(s).particular, ones);
}
