#include <benchmark/benchmark.h>

#include "qgeom/measures.hpp"
#include "qgeom/montecarlo.hpp"
#include "qgeom/rng.hpp"

using namespace qgeom;

namespace {

Spectrum fixture_spectrum(int n)
{
    RngStream stream(3, 0);
    return mc::sample_simplex_uniform(n, stream);
}

} // namespace

static void BM_HsEigenDensity(benchmark::State& state)
{
    const Spectrum s = fixture_spectrum(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hs_eigen_density(s));
    }
}
BENCHMARK(BM_HsEigenDensity)->Arg(2)->Arg(4)->Arg(8);

static void BM_LogBuresEigenDensity(benchmark::State& state)
{
    const Spectrum s = fixture_spectrum(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_bures_eigen_density(s));
    }
}
BENCHMARK(BM_LogBuresEigenDensity)->Arg(2)->Arg(4)->Arg(8);

static void BM_LogDensityRatio(benchmark::State& state)
{
    const Spectrum s = fixture_spectrum(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_density_ratio(s));
    }
}
BENCHMARK(BM_LogDensityRatio)->Arg(2)->Arg(4)->Arg(8);

static void BM_SpectrumOf(benchmark::State& state)
{
    RngStream stream(5, 0);
    const DensityMatrix rho =
        mc::sample_hs_state(static_cast<int>(state.range(0)), stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_of(rho));
    }
}
BENCHMARK(BM_SpectrumOf)->Arg(2)->Arg(4)->Arg(6);

static void BM_PartialTranspose(benchmark::State& state)
{
    RngStream stream(5, 0);
    const HilbertFactorization f({2, 2});
    const DensityMatrix rho = mc::sample_hs_state(4, stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_transpose(rho, f, 1));
    }
}
BENCHMARK(BM_PartialTranspose);

static void BM_IsPpt(benchmark::State& state)
{
    RngStream stream(5, 0);
    const HilbertFactorization f({2, 2});
    const DensityMatrix rho = mc::sample_hs_state(4, stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_ppt(rho, f));
    }
}
BENCHMARK(BM_IsPpt);

static void BM_BuresDistance(benchmark::State& state)
{
    RngStream stream(5, 0);
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix a = mc::sample_hs_state(n, stream);
    const DensityMatrix b = mc::sample_hs_state(n, stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bures_distance(a, b));
    }
}
BENCHMARK(BM_BuresDistance)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
