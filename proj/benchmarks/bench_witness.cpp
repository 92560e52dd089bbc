#include <benchmark/benchmark.h>

#include <numbers>

#include "causal/pdo.hpp"
#include "causal/philox.hpp"
#include "causal/sweep.hpp"
#include "causal/tomography.hpp"

using namespace causal;

namespace {

const TwoState& bench_state() {
  static const TwoState ts = polarizer_two_state(PolarizerConfig(std::numbers::pi / 6, 0.4));
  return ts;
}

void BM_Eig2(benchmark::State& state) {
  const CMatrix m = build_gamma_incoherent(bench_state(), 0.5).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(eig2(m));
}
BENCHMARK(BM_Eig2);

void BM_BuildIncoherent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma_incoherent(bench_state(), 0.5));
}
BENCHMARK(BM_BuildIncoherent);

void BM_BuildCoherent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma_coherent(bench_state(), 0.5));
}
BENCHMARK(BM_BuildCoherent);

void BM_WitnessCompare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(witness_compare(bench_state(), 0.5));
}
BENCHMARK(BM_WitnessCompare);

void BM_ThreeTimePdo(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_three_time_pdo(ket_V(), ket_D(), CausalOrder::mixed));
}
BENCHMARK(BM_ThreeTimePdo);

void BM_SweepRows(benchmark::State& state) {
  const SweepConfig cfg(0.0, 1.45, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_rows(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepRows)->Arg(16)->Arg(146);

void BM_PhiloxUniform(benchmark::State& state) {
  RandomStream rs(1, 0);
  double acc = 0.0;
  for (auto _ : state) acc += rs.uniform();
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_PhiloxUniform);

void BM_Tomography(benchmark::State& state) {
  const ExperimentLayout layout(LayoutKind::coupled_polarizers,
                                PolarizerConfig(std::numbers::pi / 6, 0.0), 0.5);
  const PointerModel pm(0.01, 1.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_tomography(layout, pm, n, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Tomography)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_IdealTomography(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_ideal_tomography(bench_state(), n, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IdealTomography)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
