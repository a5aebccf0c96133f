#include <benchmark/benchmark.h>

#include "copslab/generators.hpp"
#include "copslab/product.hpp"
#include "copslab/solver.hpp"
#include "copslab/tree_strategies.hpp"

using namespace copslab;

static void BM_SolveGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto g = grid_graph(side, side);
  std::uint64_t states = 0;
  for (auto _ : state) {
    const auto r = solve(g, 2, MoveOrder::RobberFirst);
    states = r.stats.states;
    benchmark::DoNotOptimize(r.capture_time);
  }
  state.counters["states"] = static_cast<double>(states);
  state.counters["states/s"] = benchmark::Counter(static_cast<double>(states), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SolveGrid)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

static void BM_SolveThreeCops(benchmark::State& state) {
  const auto g = grid_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, 3, MoveOrder::RobberFirst).capture_time);
}
BENCHMARK(BM_SolveThreeCops)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_NaiveValueIteration(benchmark::State& state) {
  const auto g = grid_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(naive_value_iteration(g, 2, MoveOrder::RobberFirst).capture_time);
}
BENCHMARK(BM_NaiveValueIteration)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_TwoCopBestResponse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t1 = random_tree(n, 11);
  const auto t2 = random_tree(n, 12);
  const TwoCopProductStrategy cops(t1, t2);
  GameConfig config;
  config.cop_count = 2;
  for (auto _ : state) benchmark::DoNotOptimize(best_response_length(cops.product().flat(), config, cops));
}
BENCHMARK(BM_TwoCopBestResponse)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

static void BM_DistanceMatrix(benchmark::State& state) {
  const auto g = grid_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(DistanceMatrix(g));
}
BENCHMARK(BM_DistanceMatrix)->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
