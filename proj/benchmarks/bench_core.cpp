#include <benchmark/benchmark.h>

#include <random>

#include "liouv/darboux.hpp"
#include "liouv/exactla.hpp"
#include "liouv/ifsearch.hpp"
#include "liouv/odeparse.hpp"
#include "liouv/poly2.hpp"

using namespace liouv;

namespace {

DOperator op(const char* ode) {
  OdeInput o = parse_ode(ode);
  return build_operator(o.M, o.N);
}

const char* kTwoLines = "dy/dx = y*(1+x)/(x-x*y-y^2+x^2)";
const char* kAbel = "dy/dx = -y^2*(y*x+y+1)/(x^2+2*x+1)";
const char* kParabola = "dy/dx = 1/2*(-1+x+y+3*y^2)/(2*x+y+x*y+y^2-y^3)";
const char* kElementary =
    "dy/dx = (-14*x-14*y-28*x^3+14*y^3+40*x^4-58*x^5-19*x^2*y+30*x^3*y-23*x^2*y^2"
    "+26*x^3*y^2+14*x*y^3+21*x^4*y)/(x*(7*x^2+7*x^3+7*x+7*y+7*x*y+7*y^2+13*x^2*y"
    "+7*x*y^2+13*x^3*y+7*x^4))";

void BM_SearchTwoLines(benchmark::State& state) {
  DOperator D = op(kTwoLines);
  for (auto _ : state) benchmark::DoNotOptimize(auto_search(D, make_schedule(1, 1, 1)));
}
BENCHMARK(BM_SearchTwoLines)->Unit(benchmark::kMillisecond);

void BM_SearchAbel(benchmark::State& state) {
  DOperator D = op(kAbel);
  for (auto _ : state) benchmark::DoNotOptimize(auto_search(D, default_schedule()));
}
BENCHMARK(BM_SearchAbel)->Unit(benchmark::kMillisecond);

void BM_SearchElementary(benchmark::State& state) {
  DOperator D = op(kElementary);
  for (auto _ : state) benchmark::DoNotOptimize(auto_search(D, default_schedule()));
}
BENCHMARK(BM_SearchElementary)->Unit(benchmark::kMillisecond);

void BM_DarbouxDegree(benchmark::State& state) {
  DOperator D = op(kParabola);
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_darboux(D, deg));
}
BENCHMARK(BM_DarbouxDegree)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

Poly2 random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(-9, 9);
  Poly2 p;
  for (const Monomial& m : monomials_up_to(deg)) p += Poly2(m, BigRational(c(rng)));
  return p;
}

void BM_Gcd(benchmark::State& state) {
  std::mt19937 rng(3);
  const int deg = static_cast<int>(state.range(0));
  const Poly2 g = random_poly(rng, deg);
  const Poly2 a = g * random_poly(rng, deg);
  const Poly2 b = g * random_poly(rng, deg);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_SolveLinear(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-20, 20);
  const auto n = static_cast<std::size_t>(state.range(0));
  LinSystem sys;
  sys.matrix.assign(n + n / 2, std::vector<BigRational>(n));
  for (auto& row : sys.matrix) {
    for (auto& v : row) v = c(rng);
  }
  sys.rhs.assign(sys.matrix.size(), BigRational(0));
  for (std::size_t j = 0; j < n; ++j) sys.unknownNames.push_back("a" + std::to_string(j + 1));
  for (auto _ : state) benchmark::DoNotOptimize(try_solve_linear(sys));
}
BENCHMARK(BM_SolveLinear)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
