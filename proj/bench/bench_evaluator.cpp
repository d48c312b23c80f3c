#include <benchmark/benchmark.h>

#include "linksim/evaluator.hpp"

using namespace linksim;

namespace {

evaluator::SimulationSetup bench_setup(int runs, int users) {
  evaluator::SimulationSetup setup;
  setup.scenario.n_runs = runs;
  setup.scenario.n_users = users;
  return setup;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto setup = bench_setup(static_cast<int>(state.range(0)), 32);
  const auto combos = default_combos(true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator::evaluate_all_serial(setup, combos));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(combos.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto setup = bench_setup(static_cast<int>(state.range(0)), 32);
  const auto combos = default_combos(true);
  const evaluator::ExecutionPolicy policy{static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator::evaluate_all(setup, combos, policy));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(combos.size()));
}

void BM_SweepUsers(benchmark::State& state) {
  const auto setup = bench_setup(100, 6);
  const auto combos = default_combos(false);
  const std::vector<int> counts{2, 4, 8, 16, 32};
  const evaluator::ExecutionPolicy policy{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator::sweep_users(setup, combos, counts, policy));
  }
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)
    ->ArgsProduct({{1000, 10000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SweepUsers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
