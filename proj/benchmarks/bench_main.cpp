#include <benchmark/benchmark.h>

#include "ncstirling/ncstirling.hpp"

using namespace ncs;

static void BM_ClassicalTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_stirling_table(n));
}
BENCHMARK(BM_ClassicalTable)->Arg(20)->Arg(64)->Arg(128);

static void BM_Recurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_by_recurrence(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Recurrence)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_Explicit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = build_stirling_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_by_explicit(n, table));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Explicit)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_Suite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto opts = SuiteOptions::for_order(n);
  const auto table = build_stirling_table(opts.required_order());
  const auto rec = build_by_recurrence(n);
  const auto exp = build_by_explicit(n, table);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(rec, exp, table, opts));
}
BENCHMARK(BM_Suite)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_DerivativeByJets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derivative_by_jets(2.5, 0.7, 1.3, n));
}
BENCHMARK(BM_DerivativeByJets)->DenseRange(2, 12, 5);

static void BM_OracleGrid(benchmark::State& state) {
  const auto tri = build_by_recurrence(8);
  const auto grid = OracleGrid::standard();
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle_grid(tri, grid, 1e-6));
}
BENCHMARK(BM_OracleGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
