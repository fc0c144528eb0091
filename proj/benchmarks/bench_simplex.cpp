#include <benchmark/benchmark.h>

#include <random>

#include "cutlab/simplex.hpp"

using namespace cutlab;

// random feasible-looking LP: min c.x, A x >= b with x >= 0 rows included
static LinearProgram random_lp(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-5, 5), cost(0, 9);
  LinearProgram lp;
  for (int j = 0; j < cols; ++j) lp.add_var(VarBounds::nonneg(), Rational(cost(rng)));
  for (int i = 0; i < rows; ++i) {
    std::vector<std::pair<int, Rational>> coeffs;
    for (int j = 0; j < cols; ++j) {
      const int v = val(rng);
      if (v != 0) coeffs.emplace_back(j, Rational(v));
    }
    lp.add_row(coeffs, RowSense::Ge, Rational(-10));
  }
  return lp;
}

static void BM_simplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LinearProgram lp = random_lp(n, n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_simplex)->Arg(10)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
