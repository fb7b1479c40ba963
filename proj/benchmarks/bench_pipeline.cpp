#include <benchmark/benchmark.h>

#include "qcorr/dynamics.hpp"
#include "qcorr/eigen.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random_states.hpp"

using namespace qcorr;

namespace {

void BM_eigh4(benchmark::State& state) {
    Rng rng(5);
    const DensityMatrix rho = random_mixed_state(rng);
    for (auto _ : state) benchmark::DoNotOptimize(eigh(rho.matrix()));
}
BENCHMARK(BM_eigh4);

void BM_channel_apply(benchmark::State& state) {
    const DensityMatrix rho = make_werner(0.8);
    const KrausChannel ch = gad(0.3, 2.0 / 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(apply_local_pair(rho, ch, ch));
}
BENCHMARK(BM_channel_apply);

void BM_concurrence_general(benchmark::State& state) {
    Rng rng(7);
    const DensityMatrix rho = random_mixed_state(rng);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_general(rho));
}
BENCHMARK(BM_concurrence_general);

void BM_interferometric_power(benchmark::State& state) {
    Rng rng(9);
    const DensityMatrix rho = random_mixed_state(rng);
    for (auto _ : state) benchmark::DoNotOptimize(interferometric_power(rho));
}
BENCHMARK(BM_interferometric_power);

void BM_sweep_point(benchmark::State& state) {
    for (auto _ : state) {
        const DensityMatrix rho = evolve(Scenario::GadQ1, 0.3, 0.4);
        benchmark::DoNotOptimize(concurrence_general(rho));
        benchmark::DoNotOptimize(interferometric_power(rho));
    }
}
BENCHMARK(BM_sweep_point);

void BM_death_search(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            find_death(Scenario::GadQ2of3, 0.5, Measure::Concurrence, 1e-18, 1000));
}
BENCHMARK(BM_death_search)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
