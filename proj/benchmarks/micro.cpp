#include <benchmark/benchmark.h>

#include "flight_fixture.hpp"
#include "switchopt/switchopt.hpp"

using namespace switchopt;

namespace {

void BM_ScheduleCost(benchmark::State& state) {
  const auto table = testing::micro_table(1, static_cast<std::size_t>(state.range(0)), 10);
  RngStream rng(2);
  const Solution s = random_solution(table.domain(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(flight::schedule_cost(table, s));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ScheduleCost)->Arg(1)->Arg(6);

void BM_Benchmark(benchmark::State& state) {
  const auto& spec = bench::catalog()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(spec.name);
  RngStream rng(3);
  const Solution s = random_solution(spec.domain, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spec.formula(s));
}
BENCHMARK(BM_Benchmark)->DenseRange(0, 10);

void BM_Operators(benchmark::State& state) {
  const Domain d = Domain::uniform(13, -10, 10);
  RngStream rng(4);
  const Solution a = random_solution(d, rng);
  const Solution b = random_solution(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(one_point_mutation(a, d, rng));
    benchmark::DoNotOptimize(single_point_crossover(a, b, rng));
  }
}
BENCHMARK(BM_Operators);

void BM_GaRun(benchmark::State& state) {
  const auto& spec = bench::find("rosenbrock13");
  GaConfig cfg;
  cfg.generations = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ObjectiveProbe probe = bench::make_probe(spec);
    RngStream rng(seed++);
    benchmark::DoNotOptimize(ga(probe, spec.domain, cfg, rng).best_cost);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.generations));
}
BENCHMARK(BM_GaRun)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SimulatedAnnealing(benchmark::State& state) {
  const auto& spec = bench::find("rosenbrock13");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ObjectiveProbe probe = bench::make_probe(spec);
    RngStream rng(seed++);
    benchmark::DoNotOptimize(simulated_annealing(probe, spec.domain, SaConfig{}, rng).best_cost);
  }
}
BENCHMARK(BM_SimulatedAnnealing)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
