#include <benchmark/benchmark.h>

#include "nqueens/parallel.hpp"
#include "nqueens/solver.hpp"

using namespace nqueens;

static void BM_CountDynamic(benchmark::State& state) {
  const BoardSize n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_all_solutions(n, SolverVariant::Dynamic));
  }
}
BENCHMARK(BM_CountDynamic)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void BM_CountFixed(benchmark::State& state) {
  const BoardSize n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_all_solutions(n, SolverVariant::FixedCapacity));
  }
}
BENCHMARK(BM_CountFixed)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void BM_Para(benchmark::State& state) {
  const BoardSize n(static_cast<int>(state.range(0)));
  const ExecutionMode mode{Strategy::Para, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(count_parallel(n, mode));
}
BENCHMARK(BM_Para)->ArgsProduct({{8, 10, 12}, {1, 4}})->Unit(benchmark::kMillisecond)
    ->UseRealTime();

// Includes starting and joining the pool on every call.
static void BM_Pool(benchmark::State& state) {
  const BoardSize n(static_cast<int>(state.range(0)));
  const ExecutionMode mode{Strategy::Pool, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(count_parallel(n, mode));
}
BENCHMARK(BM_Pool)->ArgsProduct({{8, 10, 12}, {1, 4}})->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
