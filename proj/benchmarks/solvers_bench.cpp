#include <benchmark/benchmark.h>

#include "partopt/partopt.hpp"

using namespace partopt;

namespace {

ProblemInstance instance_of(std::size_t n) {
  GenSpec spec;
  spec.nodes = n;
  spec.edges = 2 * n;
  spec.seed = 7;
  return generate(spec);
}

// One decision probe just below the optimum: the hardest threshold.
void BM_OracleProbe(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  const Cost opt = *minimize(inst).optimum_hp;
  for (auto _ : state) benchmark::DoNotOptimize(feasible(inst, std::max<Cost>(0, opt - 1)));
}
BENCHMARK(BM_OracleProbe)->DenseRange(16, 32, 8)->Unit(benchmark::kMillisecond);

void BM_SweepSequential(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_sequential(inst));
}
BENCHMARK(BM_SweepSequential)->DenseRange(16, 28, 4)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  SweepConfig cfg;
  cfg.workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(inst, cfg));
}
BENCHMARK(BM_SweepParallel)->ArgsProduct({{20, 28}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepBinary(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_binary(inst));
}
BENCHMARK(BM_SweepBinary)->DenseRange(16, 28, 4)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(inst));
}
BENCHMARK(BM_BranchAndBound)->DenseRange(16, 28, 4)->Unit(benchmark::kMillisecond);

void BM_Genetic(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ga_solve(inst));
}
BENCHMARK(BM_Genetic)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(inst));
}
BENCHMARK(BM_Enumerate)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ParseInstance(benchmark::State& state) {
  const std::string text = write_instance(instance_of(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_instance(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseInstance)->Arg(100)->Arg(1000);

}  // namespace
BENCHMARK_MAIN();
