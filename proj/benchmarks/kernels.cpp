#include <benchmark/benchmark.h>

#include "phasespace/distributions.hpp"
#include "phasespace/measurement.hpp"
#include "phasespace/pointer.hpp"
#include "phasespace/sampler.hpp"
#include "phasespace/states.hpp"

namespace {

using namespace phasespace;

WaveFunction bench_state(std::size_t n) {
  const Grid grid = make_grid(n, -16, 16);
  return superpose(1.0, cat_state(grid, 2, 1), cplx(0.3, 0.4), fock_state(grid, 3));
}

void BM_Husimi(benchmark::State& state) {
  const WaveFunction psi = bench_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(husimi(psi, 1.0));
}
BENCHMARK(BM_Husimi)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Wigner(benchmark::State& state) {
  const WaveFunction psi = bench_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wigner(psi));
}
BENCHMARK(BM_Wigner)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Characteristic(benchmark::State& state) {
  const WaveFunction psi = bench_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(characteristic(psi, -1.0));
}
BENCHMARK(BM_Characteristic)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SuccessiveDensity(benchmark::State& state) {
  const WaveFunction psi = bench_state(256);
  for (auto _ : state) benchmark::DoNotOptimize(successive_density(psi, 1.0));
}
BENCHMARK(BM_SuccessiveDensity)->Unit(benchmark::kMillisecond);

void BM_Sampler(benchmark::State& state) {
  const WaveFunction psi = bench_state(256);
  for (auto _ : state) benchmark::DoNotOptimize(sample_joint(psi, 1.0, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sampler)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Pointer(benchmark::State& state) {
  const WaveFunction psi = bench_state(256);
  for (auto _ : state) benchmark::DoNotOptimize(pointer_vs_direct(psi, {0.5, 1.0}));
}
BENCHMARK(BM_Pointer)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
