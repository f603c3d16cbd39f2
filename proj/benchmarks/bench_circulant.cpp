#include <benchmark/benchmark.h>

#include <random>

#include "rabiwave/circulant.hpp"

using rabiwave::Circulant;

namespace {

Circulant random_circulant(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::complex<double>> c(static_cast<size_t>(n));
    for (auto& v : c) v = {dist(rng), dist(rng)};
    return Circulant(std::move(c));
}

void BM_CirculantMultiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Circulant a = random_circulant(n, 1);
    const Circulant b = random_circulant(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CirculantMultiply)->Arg(4)->Arg(8)->Arg(32);

void BM_CirculantEigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Circulant a = random_circulant(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a.eigenvalues());
}
BENCHMARK(BM_CirculantEigenvalues)->Arg(4)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
