#include <benchmark/benchmark.h>

#include "qgeom/montecarlo.hpp"
#include "qgeom/rng.hpp"

using namespace qgeom;

static void BM_RngU64(benchmark::State& state)
{
    RngStream stream(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.next_u64());
    }
}
BENCHMARK(BM_RngU64);

static void BM_RngNormal(benchmark::State& state)
{
    RngStream stream(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.normal());
    }
}
BENCHMARK(BM_RngNormal);

static void BM_HaarUnitary(benchmark::State& state)
{
    RngStream stream(1, 0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::sample_haar_unitary(n, stream));
    }
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(4)->Arg(8);

static void BM_HsState(benchmark::State& state)
{
    RngStream stream(1, 0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::sample_hs_state(n, stream));
    }
}
BENCHMARK(BM_HsState)->Arg(2)->Arg(4)->Arg(6);

static void BM_SimplexUniform(benchmark::State& state)
{
    RngStream stream(1, 0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::sample_simplex_uniform(n, stream));
    }
}
BENCHMARK(BM_SimplexUniform)->Arg(2)->Arg(4)->Arg(8);

static void BM_HsProbabilityKtube(benchmark::State& state)
{
    const std::int64_t draws = state.range(0);
    mc::McConfig config;
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::estimate_hs_probability(
            2, mc::sets::k_tube(0.5), draws, 7, config));
    }
    state.SetItemsProcessed(state.iterations() * draws);
}
BENCHMARK(BM_HsProbabilityKtube)->Arg(10000)->Arg(100000);

static void BM_BuresProbabilityKtube(benchmark::State& state)
{
    const std::int64_t draws = state.range(0);
    mc::McConfig config;
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::estimate_bures_probability(
            2, mc::sets::k_tube(0.5), draws, 7, config));
    }
    state.SetItemsProcessed(state.iterations() * draws);
}
BENCHMARK(BM_BuresProbabilityKtube)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
