#include <benchmark/benchmark.h>

#include <cmath>

#include "ridgenet/experiments.hpp"
#include "ridgenet/phantom.hpp"
#include "ridgenet/radon.hpp"
#include "ridgenet/ridgelet.hpp"
#include "ridgenet/spectral.hpp"

using namespace ridgenet;

namespace {

// a-range from the argument, steps of the sine experiment
ParamGrid box_1d(double range) { return BoxSpec{range, 0.1, range, 0.1}.make(1); }

void BM_forward_1d(benchmark::State& state) {
    const SampledSignal f = sine_signal(sine_axis(0.01));
    const ParamGrid grid = box_1d(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(forward_1d(f, {1, 0}, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(grid.size() * f.size()));
}
BENCHMARK(BM_forward_1d)->Arg(5)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_fourier_slice(benchmark::State& state) {
    const SampledSignal f = sine_signal(sine_axis(0.01));
    const ParamGrid grid = box_1d(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(forward_fourier_slice(f, {1, 0}, grid));
}
BENCHMARK(BM_fourier_slice)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_dual_1d(benchmark::State& state) {
    const SampledSignal f = sine_signal(sine_axis(0.01));
    const auto T = forward_1d(f, {1, 2}, box_1d(10.0));
    const ActivationSpec eta = state.range(0) ? sigmoid_derivative(1) : relu();
    for (auto _ : state) benchmark::DoNotOptimize(dual_transform(T, eta, 1.0, f.grid()));
    state.SetLabel(eta.name());
}
BENCHMARK(BM_dual_1d)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_forward_2d(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SampledImage f = shepp_logan(n, 2);
    const ParamGrid grid = BoxSpec{10.0, 1.0, 10.0, 1.0}.make(2);
    for (auto _ : state) benchmark::DoNotOptimize(forward_2d(f, {2, 0}, grid));
}
BENCHMARK(BM_forward_2d)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_radon(benchmark::State& state) {
    const SampledImage f = shepp_logan(static_cast<std::size_t>(state.range(0)), 2);
    const Grid1D angles = half_circle_angles();
    const Grid1D offsets = diagonal_offsets(f);
    for (auto _ : state) benchmark::DoNotOptimize(radon_2d(f, angles, offsets));
}
BENCHMARK(BM_radon)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_fbp(benchmark::State& state) {
    const SampledImage f = shepp_logan(64, 2);
    for (auto _ : state) benchmark::DoNotOptimize(filtered_backprojection(f));
}
BENCHMARK(BM_fbp)->Unit(benchmark::kMillisecond);

void BM_multiplier(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(-0.5 * std::pow(static_cast<double>(i) / n * 16 - 8, 2));
    for (auto _ : state) benchmark::DoNotOptimize(apply_multiplier(v, 16.0 / n, SpectralMultiplier::power(1)));
}
BENCHMARK(BM_multiplier)->Arg(1000)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
