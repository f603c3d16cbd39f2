#include <benchmark/benchmark.h>

#include "rabiwave/dynamics_discrete.hpp"

using namespace rabiwave;

namespace {

SystemParams packet_params(int n_sites) {
    SystemParams p;
    p.n_chains = 1;
    p.n_sites = n_sites;
    p.omega0 = 7.75;
    p.wavenumber = 0.5;
    p.xi1 = {10.0};
    p.xi2 = {7.0};
    p.lambda = 0.05;
    p.mean_photons = 4.0;
    p.sigma = 20.0;
    p.x0 = n_sites / 2.0;
    p.dt = 1e-3;
    p.t_end = 0.1;
    p.sample_stride = 100;
    return p;
}

void BM_Rhs(benchmark::State& state) {
    const SystemParams p = packet_params(static_cast<int>(state.range(0)));
    const AmplitudeField f = initial_state(p);
    AmplitudeField d = f;
    for (auto _ : state) {
        rhs(f, 0.5, p, d);
        benchmark::DoNotOptimize(d.a.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_Rhs)->Arg(256)->Arg(1024)->Arg(2048);

void BM_IntegrateShort(benchmark::State& state) {
    const SystemParams p = packet_params(512);
    const AmplitudeField f = initial_state(p);
    for (auto _ : state) {
        auto traj = integrate(f, p, EdgeContactPolicy::Warn);
        benchmark::DoNotOptimize(traj.times.size());
    }
}
BENCHMARK(BM_IntegrateShort)->Unit(benchmark::kMillisecond);

}  // namespace
