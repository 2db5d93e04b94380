#include <benchmark/benchmark.h>

#include "chigen/genus1.hpp"

using namespace chigen;

static void BM_SeriesMul(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  MultiSeries a = x1_series(cap, cap);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesMul)->Arg(10)->Arg(20)->Arg(30);

static void BM_X1(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(x1_series(cap, cap));
}
BENCHMARK(BM_X1)->Arg(20)->Arg(40);

static void BM_XNext(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int cap = 4;
  MultiSeries prev = x_series(n - 1, cap + 1, cap);
  MultiSeries p = phi(n, cap, cap);
  for (auto _ : state)
    benchmark::DoNotOptimize(x_next(prev, p, n, cap, cap));
}
BENCHMARK(BM_XNext)->Arg(2)->Arg(3)->Arg(4);

static void BM_ChiTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_table(n, 3, 3));
}
BENCHMARK(BM_ChiTable)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
