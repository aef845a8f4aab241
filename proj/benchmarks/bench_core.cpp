#include <cmath>

#include <benchmark/benchmark.h>

#include "plwp/crosscheck.hpp"
#include "plwp/entropy.hpp"
#include "plwp/specfun.hpp"

using namespace plwp;

static void BM_LnGamma(benchmark::State& state) {
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::ln_gamma(x));
        x = x < 100.0 ? x * 1.01 : 0.7;
    }
}
BENCHMARK(BM_LnGamma);

static void BM_Digamma(benchmark::State& state) {
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::digamma(x));
        x = x < 100.0 ? x * 1.01 : 0.7;
    }
}
BENCHMARK(BM_Digamma);

static void BM_BesselKLn(benchmark::State& state) {
    const double nu = 0.5 * state.range(0);
    double x = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::bessel_k_ln(nu, x));
        x = x < 500.0 ? x * 1.5 : 0.01;
    }
}
BENCHMARK(BM_BesselKLn)->Arg(0)->Arg(1)->Arg(4);

static void BM_TanhSinhGaussian(benchmark::State& state) {
    auto f = [](double x) { return std::exp(-x * x); };
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_real_line(f).value);
}
BENCHMARK(BM_TanhSinhGaussian);

static void BM_MomentumIntegral(benchmark::State& state) {
    PowerLawPacket p(0.1 * state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(i_alpha(p));
}
BENCHMARK(BM_MomentumIntegral)->Arg(8)->Arg(20)->Arg(100);

static void BM_TotalUncertainty(benchmark::State& state) {
    PowerLawPacket p(0.1 * state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(total_uncertainty(p).u_total);
}
BENCHMARK(BM_TotalUncertainty)->Arg(8)->Arg(20)->Arg(100);

static void BM_FourierTransform(benchmark::State& state) {
    PowerLawPacket p(2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(crosscheck::ft_numeric(p, 2.0));
}
BENCHMARK(BM_FourierTransform);

BENCHMARK_MAIN();
