// Serial reference vs OpenMP for the data-parallel kernels. The second
// benchmark argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "thermocone/catalysis.hpp"
#include "thermocone/entanglement.hpp"
#include "thermocone/volume.hpp"

using namespace thermocone;

namespace {

Execution mode(const benchmark::State& st) {
    return st.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

EnergySpectrum ladder(std::size_t d, double beta) {
    std::vector<double> e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = 0.7 * static_cast<double>(i);
    return EnergySpectrum(e, beta);
}

Dist decreasing(std::size_t d) {
    std::vector<double> v(d);
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += v[i] = 1.0 / (1.0 + static_cast<double>(i * i) * 0.37);
    for (double& x : v) x /= s;
    return Dist(v);
}

void BM_McVolume(benchmark::State& st) {
    const EnergySpectrum spec({0.0, 1.0, 2.0}, 0.2);
    const Dist p{0.34, 0.59, 0.07};
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(mc_volume(p, spec, Region::CatalysableFuture, n, 1, mode(st)).hits);
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_McVolume)->Args({100000, 0})->Args({100000, 1})->Unit(benchmark::kMillisecond);

void BM_FutureVertices(benchmark::State& st) {
    const auto d = static_cast<std::size_t>(st.range(0));
    const EnergySpectrum spec = ladder(d, 0.6);
    const Dist p = decreasing(d);
    for (auto _ : st) benchmark::DoNotOptimize(future_cone_vertices(p, spec, mode(st)).size());
}
BENCHMARK(BM_FutureVertices)->Args({6, 0})->Args({6, 1})->Args({8, 0})->Args({8, 1})
    ->Unit(benchmark::kMillisecond);

void BM_CPlusVertices(benchmark::State& st) {
    const auto d = static_cast<std::size_t>(st.range(0));
    const EnergySpectrum spec = ladder(d, 0.6);
    const Dist p = decreasing(d);
    for (auto _ : st) benchmark::DoNotOptimize(c_plus_vertices(p, spec, mode(st)).size());
}
BENCHMARK(BM_CPlusVertices)->Args({6, 0})->Args({6, 1})->Args({8, 0})->Args({8, 1})
    ->Unit(benchmark::kMillisecond);

void BM_EntanglementRatio(benchmark::State& st) {
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(volume_ratio_CN_TN(0.5, n, 1, 0, mode(st)).ratio);
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EntanglementRatio)->Args({100000, 0})->Args({100000, 1})->Unit(benchmark::kMillisecond);

void BM_QubitSearch(benchmark::State& st) {
    const EnergySpectrum spec({0.0, 1.0, 2.0}, 0.2);
    const Dist p{0.42, 0.51, 0.07};
    const Dist q{0.52, 0.13, 0.35};
    const auto grid = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(search_qubit_catalyst(p, q, spec, 0.5, grid, mode(st)).size());
}
BENCHMARK(BM_QubitSearch)->Args({2000, 0})->Args({2000, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
