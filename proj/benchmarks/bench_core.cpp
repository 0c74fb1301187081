#include <benchmark/benchmark.h>

#include "otto/correlations.hpp"
#include "otto/cycle.hpp"
#include "otto/oracle.hpp"
#include "otto/sweep.hpp"

namespace {

const otto::SubstanceParams kPoint{4.0, 1.5};
const otto::CycleSpec kCycle{{{4.0, 1.5}, 4.0}, {{1.0, 1.5}, 1.0}};

void BM_Spectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(otto::spectrum(kPoint));
}
BENCHMARK(BM_Spectrum);

void BM_ThermalXState(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(otto::thermal_xstate(kPoint, 1.3));
}
BENCHMARK(BM_ThermalXState);

void BM_DiscordAnalytic(benchmark::State& state) {
  const auto x = otto::thermal_xstate(kPoint, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(otto::discord_analytic(x));
}
BENCHMARK(BM_DiscordAnalytic);

void BM_DiscordBruteforce(benchmark::State& state) {
  const auto x = otto::thermal_xstate(kPoint, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(otto::oracle::discord_bruteforce(x));
}
BENCHMARK(BM_DiscordBruteforce)->Unit(benchmark::kMillisecond);

void BM_JacobiHamiltonian(benchmark::State& state) {
  const auto h = otto::oracle::build_hamiltonian(kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(otto::oracle::jacobi_eigensolve(h));
}
BENCHMARK(BM_JacobiHamiltonian);

void BM_EvaluateCycle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(otto::evaluate_cycle(kCycle));
}
BENCHMARK(BM_EvaluateCycle);

void BM_Fig2aSweep(benchmark::State& state) {
  const auto spec = otto::figure_preset("fig2a").front().spec;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(otto::run_sweep(spec, threads));
}
BENCHMARK(BM_Fig2aSweep)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
