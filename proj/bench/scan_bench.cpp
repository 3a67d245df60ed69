#include <benchmark/benchmark.h>

#include "gfl/obstruction.hpp"
#include "gfl/scanner.hpp"

namespace {

void bm_grid_min_serial(benchmark::State& state) {
    const auto params = gfl::lattice_params(gfl::Rational(1, 2), gfl::Rational(3, 2));
    const long n = state.range(0);
    for (auto _ : state) {
        auto gm = gfl::grid_min_sigma_serial(gfl::hat_window(), params, n);
        benchmark::DoNotOptimize(gm);
    }
}
BENCHMARK(bm_grid_min_serial)->Arg(16)->Arg(32)->Arg(64);

void bm_grid_min_omp(benchmark::State& state) {
    const auto params = gfl::lattice_params(gfl::Rational(1, 2), gfl::Rational(3, 2));
    const long n = state.range(0);
    for (auto _ : state) {
        auto gm = gfl::grid_min_sigma(gfl::hat_window(), params, n);
        benchmark::DoNotOptimize(gm);
    }
}
BENCHMARK(bm_grid_min_omp)->Arg(16)->Arg(32)->Arg(64);

void bm_certify(benchmark::State& state) {
    const long m = state.range(0);
    const long k = 2 * m;  // widest family member for this m
    for (auto _ : state) {
        auto cert = gfl::certify_conj1(m, k, gfl::Rational(1, 2 * m + 1));
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(bm_certify)->Arg(1)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
