#include <cmath>

#include <benchmark/benchmark.h>

#include "gcontract/beta.hpp"
#include "gcontract/experiment.hpp"
#include "gcontract/generators.hpp"
#include "gcontract/oracle.hpp"

using namespace gcontract;

namespace {

ColouredGraph er_graph(std::size_t n, std::uint32_t colours) {
  const auto m = static_cast<std::uint64_t>(std::ceil(n * std::log(static_cast<double>(n))));
  return gen_random_coloured({n, EdgeCount{m}, colours, 1});
}

void BM_Contract(benchmark::State& state, Scratchpad scratchpad) {
  const auto g = er_graph(static_cast<std::size_t>(state.range(0)), 1);
  ContractOptions options;
  options.scratchpad = scratchpad;
  for (auto _ : state)
    benchmark::DoNotOptimize(contract_to_fixpoint(g, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}

void BM_Oracle(benchmark::State& state) {
  const auto g = er_graph(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(simple_gamma_contraction(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}

void BM_ContractColoured(benchmark::State& state) {
  const auto g = er_graph(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(contract_to_fixpoint(g));
}

ExperimentConfig experiment_config() {
  ExperimentConfig config;
  config.n = 5000;
  config.m = 45000;
  config.seeds = 16;
  return config;
}

void BM_ExperimentSerial(benchmark::State& state) {
  const auto config = experiment_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(run_experiment_serial(config));
}

void BM_ExperimentParallel(benchmark::State& state) {
  const auto config = experiment_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(run_experiment_parallel(config));
}

} // namespace

BENCHMARK_CAPTURE(BM_Contract, faithful, Scratchpad::faithful)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Contract, epoch, Scratchpad::epoch)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContractColoured)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
