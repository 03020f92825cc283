#include "fredholm/basis.hpp"
#include "fredholm/exact.hpp"
#include "fredholm/galerkin.hpp"
#include "fredholm/problems.hpp"
#include "fredholm/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace fredholm;

static void BM_GaussLegendre(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(q));
}
BENCHMARK(BM_GaussLegendre)->Arg(8)->Arg(32)->Arg(128);

static void BM_BasisRow(benchmark::State& state) {
  const BasisSpec spec(static_cast<int>(state.range(0)), 0.0, 1.0);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(basis_row(spec, x));
    x = x < 0.99 ? x + 0.01 : 0.0;
  }
}
BENCHMARK(BM_BasisRow)->Arg(3)->Arg(10)->Arg(50);

static void BM_AssembleExample4(benchmark::State& state) {
  const auto problem = builtin("example4");
  const int n = static_cast<int>(state.range(0));
  const int q = default_quadrature_order(n);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(problem, n, q));
}
BENCHMARK(BM_AssembleExample4)->DenseRange(3, 7)->Arg(15);

static void BM_SolveFloatExample4(benchmark::State& state) {
  const auto problem = builtin("example4");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem, n, SolveMode::Float));
}
BENCHMARK(BM_SolveFloatExample4)->DenseRange(3, 7);

static void BM_SolveExactExample1(benchmark::State& state) {
  const auto problem = *builtin("example1").to_exact();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_solve(problem, n));
}
BENCHMARK(BM_SolveExactExample1)->Arg(3)->Arg(6)->Arg(10);

static void BM_ConvergenceStudy(benchmark::State& state) {
  const auto problem = builtin("example4");
  for (auto _ : state) benchmark::DoNotOptimize(convergence_study(problem, {3, 4, 5, 6}));
}
BENCHMARK(BM_ConvergenceStudy);

BENCHMARK_MAIN();
