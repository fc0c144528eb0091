#include <benchmark/benchmark.h>

#include <random>

#include "cutlab/matrix.hpp"

using namespace cutlab;

static RatMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-9, 9);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(val(rng));
  return m;
}

static void BM_rank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatMatrix m = random_matrix(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(10)->Arg(25)->Arg(50);

static void BM_solve_square(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatMatrix m = random_matrix(n, 7);
  RatVec rhs(n, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_square(m, rhs));
}
BENCHMARK(BM_solve_square)->Arg(10)->Arg(25);

BENCHMARK_MAIN();
