#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "helm/analytic.hpp"
#include "helm/experiments.hpp"
#include "helm/fourier.hpp"
#include "helm/nonlinear.hpp"

namespace {

void bm_legendre_rule(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(helm::legendre_rule(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_legendre_rule)->Arg(5)->Arg(16)->Arg(64);

void bm_fourier_axis_coeff(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            helm::fourier_axis_coeff([](double x) { return x; }, 1.0, t, 5));
}
BENCHMARK(bm_fourier_axis_coeff)->Arg(1)->Arg(4)->Arg(16);

void bm_exact_uhat_mode_sweep(benchmark::State& state) {
    const helm::WaveParams p(1.0 / 3.0, 0.5);
    const helm::ModeGrid grid =
        helm::ModeGrid::square_window(3.0, static_cast<int>(state.range(0)),
                                      {0.05, 0.1, 0.25, 0.4}, p);
    helm::CauchyData data;
    data.g_hat.assign(grid.n_modes(), helm::cxd(1e-3, 0.0));
    data.f_hat = [](std::size_t, double s) { return helm::cxd(s * s, -s); };
    const helm::GaussRule rule = helm::legendre_rule(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(helm::exact_uhat(data, grid, p, rule));
    state.SetComplexityN(grid.n_modes());
}
BENCHMARK(bm_exact_uhat_mode_sweep)->Arg(10)->Arg(20)->Arg(30)->Complexity();

void bm_volterra_march(benchmark::State& state) {
    const helm::WaveParams params(std::sqrt(5.0), std::numbers::pi / std::sqrt(3.0));
    helm::NonlinearRegSetup setup = helm::thm17_setup(1e-3, params);
    setup.volterra_steps = static_cast<int>(state.range(0));
    const helm::ModeGrid grid = helm::ModeGrid::square_window(
        std::sqrt(setup.reg.cutoff()), 10,
        helm::volterra_partition(setup.volterra_steps, params), params);
    auto rhat = [&](std::size_t m, double z) {
        return helm::example2_rhat(grid.rho(m), z, params);
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(helm::volterra_march(rhat, setup, grid, params));
}
BENCHMARK(bm_volterra_march)->Arg(25)->Arg(50)->Arg(100);

} // namespace

BENCHMARK_MAIN();
