#include <benchmark/benchmark.h>

#include <cmath>

#include "swipt/closed_form.hpp"
#include "swipt/oracle.hpp"
#include "swipt/sched_sim.hpp"
#include "swipt/specfun.hpp"

using namespace swipt;

namespace {

SystemParams shaped_system(int n_users) {
    SystemParams sys;
    sys.power = 1.0;
    sys.noise = 2.3305288287615237e-13;  // thermal floor, rounds to -96 dBm
    sys.eta = 0.5;
    for (int n = 1; n <= n_users; ++n)
        sys.users.push_back(FadingSpec::nakagami(3, n * 1e-5));
    return sys;
}

void BM_OrderSnrRateRow(benchmark::State& state) {
    SystemParams sys = shaped_system(static_cast<int>(state.range(0)));
    int j = sys.user_count();
    for (auto _ : state)
        benchmark::DoNotOptimize(cf::order_snr_rate(sys, j, 1));
}
BENCHMARK(BM_OrderSnrRateRow)->Arg(3)->Arg(5)->Arg(7);

void BM_OrderNsnrEnergyRow(benchmark::State& state) {
    SystemParams sys = shaped_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cf::order_nsnr_energy(sys, 1, 1));
}
BENCHMARK(BM_OrderNsnrEnergyRow)->Arg(3)->Arg(5)->Arg(7);

void BM_OrderEtOperatingPoint(benchmark::State& state) {
    SystemParams sys = shaped_system(7);
    for (auto _ : state) {
        EtResult et = cf::order_et(sys, {6, 7});
        benchmark::DoNotOptimize(et.throughput);
    }
}
BENCHMARK(BM_OrderEtOperatingPoint);

void BM_OracleOrderSnrRate(benchmark::State& state) {
    SystemParams sys = shaped_system(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::order_snr_rate(sys, 3, 1));
}
BENCHMARK(BM_OracleOrderSnrRate);

void BM_MarcumQ1(benchmark::State& state) {
    double b = 0.0;
    for (auto _ : state) {
        b = b < 8.0 ? b + 1e-3 : 0.0;
        benchmark::DoNotOptimize(marcum_q1_exact(3.4641016151377544, b));
    }
}
BENCHMARK(BM_MarcumQ1);

void BM_SimulatorSlots(benchmark::State& state) {
    SystemParams sys;
    sys.power = 1.0;
    sys.noise = 2.3305288287615237e-13;
    sys.eta = 0.5;
    for (int n = 1; n <= 4; ++n) sys.users.push_back(FadingSpec::rayleigh(n * 1e-5));
    const std::uint64_t slots = 100000;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        sim::SimResult res = sim::simulate(sys, sim::Policy::order_nsnr(2), slots, seed++);
        benchmark::DoNotOptimize(res.users[0].rate);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * slots));
}
BENCHMARK(BM_SimulatorSlots);

void BM_SimulatorOrderEt(benchmark::State& state) {
    SystemParams sys;
    sys.power = 1.0;
    sys.noise = 2.3305288287615237e-13;
    sys.eta = 0.5;
    for (int n = 1; n <= 4; ++n) sys.users.push_back(FadingSpec::ricean(6.0, n * 1e-5));
    const std::uint64_t slots = 100000;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        sim::SimResult res = sim::simulate(sys, sim::Policy::order_et({1, 2}), slots, seed++);
        benchmark::DoNotOptimize(res.users[0].rate);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * slots));
}
BENCHMARK(BM_SimulatorOrderEt);

} // namespace

BENCHMARK_MAIN();
