#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "smoothing/asymptotics.hpp"
#include "smoothing/code_bounds.hpp"
#include "smoothing/lattice_bounds.hpp"
#include "smoothing/oracle.hpp"
#include "smoothing/rng.hpp"

using namespace smoothing;

namespace {

void bm_krawtchouk_table(benchmark::State& state) {
    for (auto _ : state) {
        KrawtchoukTable table(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(bm_krawtchouk_table)->Arg(32)->Arg(64);

void bm_krawtchouk_exponent(benchmark::State& state) {
    double tau = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(krawtchouk_exponent(tau, 0.11));
        tau += 1e-9;
    }
}
BENCHMARK(bm_krawtchouk_exponent);

void bm_walsh_forward(benchmark::State& state) {
    SplitMix64 gen(7);
    std::vector<double> table(std::size_t(1) << state.range(0));
    for (auto& v : table) v = gen.next_double();
    for (auto _ : state) {
        auto copy = table;
        oracle::walsh_forward(copy);
        benchmark::DoNotOptimize(copy);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_walsh_forward)->Arg(12)->Arg(16);

void bm_exact_distance(benchmark::State& state) {
    auto code = oracle::sample_code(14, 7, 1);
    auto noise = oracle::sphere_density(14, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::exact_statistical_distance(code, noise));
}
BENCHMARK(bm_exact_distance);

void bm_worst_case_threshold(benchmark::State& state) {
    codes::WorstCaseCodeParams params;
    params.delta_dual = 0.11;
    params.beta = 0.89;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            codes::worst_case_threshold(params, codes::NoiseKind::UniformSphere));
}
BENCHMARK(bm_worst_case_threshold);

void bm_qary_bound(benchmark::State& state) {
    lattices::QaryEnsemble e{256, 128, 3329.0, 1.0};
    double w = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lattices::qary_bound(e, w));
        w += 1e-9;
    }
}
BENCHMARK(bm_qary_bound);

}  // namespace

BENCHMARK_MAIN();
