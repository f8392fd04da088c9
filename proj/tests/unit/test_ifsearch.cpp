#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "liouv/errors.hpp"
#include "liouv/ifsearch.hpp"
#include "liouv/verify.hpp"

using namespace liouv;
using fixtures::op;
using fixtures::P;

namespace {

// Box enumeration filtered by weight, then the documented order.
std::vector<ExponentVector> exponent_oracle(const std::vector<int>& degs, int degQ) {
  std::vector<ExponentVector> all{{}};
  for (int d : degs) {
    std::vector<ExponentVector> next;
    for (const auto& v : all) {
      for (int m = 0; m <= degQ; ++m) {
        ExponentVector w = v;
        w.push_back(static_cast<unsigned>(m));
        next.push_back(w);
      }
    }
    all = next;
    (void)d;
  }
  auto weight = [&](const ExponentVector& v) {
    int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<int>(v[i]) * degs[i];
    return s;
  };
  std::vector<ExponentVector> out;
  for (const auto& v : all) {
    if (weight(v) <= degQ) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return weight(a) != weight(b) ? weight(a) < weight(b) : a < b;
  });
  return out;
}

std::vector<DarbouxPair> pool_of_degrees(const std::vector<int>& degs) {
  std::vector<DarbouxPair> pool;
  for (int d : degs) pool.push_back({pow(P("x + 1"), static_cast<unsigned>(d)), P("1")});
  return pool;
}

// Row of matrix | -rhs scaled so that the first nonzero entry is 1.
std::vector<BigRational> normalized_row(std::vector<BigRational> row, const BigRational& rhs) {
  row.push_back(-rhs);
  for (const auto& v : row) {
    if (v != 0) {
      BigRational inv = 1 / v;
      for (auto& w : row) w *= inv;
      break;
    }
  }
  return row;
}

}  // namespace

TEST(Exponents, MatchBoxOracle) {
  for (const auto& degs : std::vector<std::vector<int>>{{1, 1}, {1, 2, 1}, {2}, {3, 1, 1, 2}, {}}) {
    for (int q = 0; q <= 5; ++q) {
      EXPECT_EQ(enumerate_exponents(pool_of_degrees(degs), q), exponent_oracle(degs, q));
    }
  }
  auto two = enumerate_exponents(pool_of_degrees({1, 1}), 1);
  ASSERT_EQ(two.size(), 3U);
  EXPECT_EQ(two[0], (ExponentVector{0, 0}));
  EXPECT_EQ(two[1], (ExponentVector{0, 1}));
  EXPECT_EQ(two[2], (ExponentVector{1, 0}));
}

TEST(AssembleSystem, TwoLineFieldAgainstKnownEquations) {
  DOperator D = op(fixtures::kTwoLines);
  DarbouxSet pool = find_darboux(D, 1);
  LinSystem s = assemble_system(D, pool.pairs, {1, 0}, 1);
  EXPECT_EQ(s.unknownNames, (std::vector<std::string>{"a1", "a2", "a3", "n1", "n2"}));
  ASSERT_EQ(s.rows(), 4U);
  // n1 + n2 + 2 = 0, -n2 - a2 - 1 = 0, -a1 = 0, n1 + n2 + 3 - a2 = 0
  auto r = [](std::vector<long> c, long k) {
    std::vector<BigRational> row;
    for (long v : c) row.emplace_back(v);
    return normalized_row(row, BigRational(-k));
  };
  std::set<std::vector<BigRational>> expected{
      r({0, 0, 0, 1, 1}, 2), r({0, -1, 0, 0, -1}, -1), r({-1, 0, 0, 0, 0}, 0),
      r({0, -1, 0, 1, 1}, 3)};
  std::set<std::vector<BigRational>> ours;
  for (std::size_t i = 0; i < s.rows(); ++i) ours.insert(normalized_row(s.matrix[i], s.rhs[i]));
  EXPECT_EQ(ours, expected);

  LinSolution sol = solve_linear(s);
  EXPECT_EQ(sol.freeUnknowns, (std::vector<std::string>{"a3"}));
  EXPECT_EQ(zero_free_vars(sol), (std::vector<BigRational>{0, 1, 0, 0, -2}));
}

TEST(AssembleSystem, AbelShapeAndSolutionFamily) {
  DOperator D = op(fixtures::kAbel);
  DarbouxSet pool = find_darboux(D, 1);
  LinSystem s = assemble_system(D, pool.pairs, {2, 2}, 4);
  EXPECT_EQ(s.rows(), 29U);
  EXPECT_EQ(s.cols(), 17U);

  auto mons = monomials_up_to(4);
  auto col = [&](const std::string& mono) {
    Poly2 m = P(mono);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (m.leading_monomial() == mons[i]) return i;
    }
    throw std::logic_error("monomial not found");
  };
  EXPECT_EQ(s.unknownNames[col("x^2*y^2")], "a13");

  for (const BigRational& t : {BigRational(0), BigRational(1), make_rational(7, 3)}) {
    std::vector<BigRational> x(17, 0);
    x[col("x^2*y^2")] = t;
    x[col("y^2")] = -(1 - 2 * t) / 2;
    x[col("x*y^2")] = 2 * t;
    x[col("y")] = -1;
    x[col("1")] = make_rational(-1, 2);
    x[col("x*y")] = -1;
    x[col("x")] = -1;
    x[col("x^2")] = make_rational(-1, 2);
    x[15] = -3;
    x[16] = -1;
    for (const auto& v : residual(s, x)) EXPECT_EQ(v, 0);
  }
  LinSolution sol = solve_linear(s);
  EXPECT_EQ(sol.freeUnknowns, (std::vector<std::string>{"a13"}));
}

TEST(Search, TwoLineFieldAtUnitDegrees) {
  DOperator D = op(fixtures::kTwoLines);
  SearchResult r = search(D, 1, 1, 1);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.mvec, (ExponentVector{1, 0}));
  EXPECT_EQ(r.factor->P, P("x"));
  ASSERT_EQ(r.factor->Qfactors.size(), 1U);
  EXPECT_EQ(r.factor->Qfactors[0], (QFactor{P("y"), 1}));
  ASSERT_EQ(r.factor->Sfactors.size(), 1U);
  EXPECT_EQ(r.factor->Sfactors[0], (SFactor{P("x + y"), -2}));
  EXPECT_TRUE(check(D, *r.factor).valid());
  // The zero vector and (0,1) come first and fail.
  ASSERT_EQ(r.report.systems.size(), 3U);
  EXPECT_EQ(r.report.systems[0].outcome, Outcome::Inconsistent);
  EXPECT_EQ(r.report.systems[2].outcome, Outcome::Success);
  EXPECT_EQ(r.report.candidatesTried, 3U);
}

TEST(Search, ExactOdeGivesUnitFactor) {
  DOperator D = build_operator(P("x"), P("-y"));
  SearchResult r = auto_search(D, default_schedule());
  ASSERT_TRUE(r.found());
  EXPECT_EQ(to_string(*r.factor), "1");
}

TEST(Search, AbelFoundAtDegreeFour) {
  DOperator D = op(fixtures::kAbel);
  SearchResult r = auto_search(D, default_schedule());
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.foundAt, (DegreeSettings{1, 4, 4}));
  EXPECT_EQ(r.mvec, (ExponentVector{2, 2}));
  EXPECT_EQ(r.factor->P, P("-(x + y + 1)^2/2"));
  EXPECT_EQ(r.factor->Q(), P("y^2*(x + 1)^2"));
  EXPECT_EQ(r.factor->Sfactors,
            (std::vector<SFactor>{{P("y"), -3}, {P("x + 1"), -1}}));
}

TEST(Schedule, DefaultsAndCaps) {
  auto s = default_schedule();
  ASSERT_EQ(s.size(), 9U);
  EXPECT_EQ(s.front(), (DegreeSettings{1, 1, 1}));
  EXPECT_EQ(s[4], (DegreeSettings{1, 5, 5}));
  EXPECT_EQ(s[5], (DegreeSettings{2, 2, 2}));
  EXPECT_EQ(s.back(), (DegreeSettings{2, 5, 5}));
  auto capped = make_schedule(1, 1, 1);
  EXPECT_EQ(capped, (std::vector<DegreeSettings>{{1, 1, 1}}));
  auto uneven = make_schedule(1, 2, 0);
  EXPECT_EQ(uneven, (std::vector<DegreeSettings>{{1, 1, 0}, {1, 2, 0}}));
  EXPECT_THROW(auto_search(op(fixtures::kTwoLines), {}), std::invalid_argument);
}

TEST(Search, ParabolaNotFoundAtDegreeOne) {
  DOperator D = op(fixtures::kParabola);
  SearchResult r = auto_search(D, make_schedule(1, 5, 5));
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.report.degreesTried.size(), 5U);
  SearchResult two = auto_search(D, make_schedule(2, 5, 5));
  ASSERT_TRUE(two.found());
  EXPECT_EQ(two.factor->P, P("-1/4 + x + y"));
  EXPECT_EQ(two.factor->Q(), P("x + y^2"));
  EXPECT_EQ(two.factor->Sfactors, (std::vector<SFactor>{{P("x + y^2"), make_rational(-3, 2)}}));
}

TEST(Search, ExpiredDeadlineCarriesReport) {
  DOperator D = op(fixtures::kAbel);
  Deadline gone(std::chrono::nanoseconds(0));
  try {
    auto_search(D, default_schedule(), gone);
    FAIL() << "expected a timeout";
  } catch (const SearchTimeout& t) {
    EXPECT_EQ(t.report.candidatesTried, 0U);
  }
  EXPECT_THROW(search(D, 1, 4, 4, gone), Timeout);
}
