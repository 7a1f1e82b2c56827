#include <benchmark/benchmark.h>

#include "extising/analysis.hpp"

using namespace extising;

static void BM_Diagonalize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ModelParams params{n, n - 1, 1.5, 2.5};
    const QuadraticForm qf = build_quadratic_form(params);
    for (auto _ : state) {
        const BogoliubovSolution sol = diagonalize(qf);
        benchmark::DoNotOptimize(sol.xi);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Diagonalize)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_CorrelatorRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ModelParams params{n, n - 1, 1.5, 2.5};
    const CorrelationData data = solve_correlations(params);
    for (auto _ : state) {
        double acc = 0.0;
        for (int j = 2; j <= n; ++j) acc += correlator_xx(data, 1, j);
        benchmark::DoNotOptimize(acc);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_CorrelatorRow)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_Profile(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ModelParams params{n, n - 1, 1.5, 2.5};
    for (auto _ : state) {
        const EntanglementProfile p = entanglement_profile(params, Measure::LogNegativity);
        benchmark::DoNotOptimize(p.e);
    }
}
BENCHMARK(BM_Profile)->Arg(128)->Arg(256);

static void BM_Monogamy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ModelParams params{n, n - 1, 1.5, 2.5};
    for (auto _ : state) {
        const MonogamyResult m = monogamy_score(params);
        benchmark::DoNotOptimize(m.delta);
    }
}
BENCHMARK(BM_Monogamy)->Arg(128);

BENCHMARK_MAIN();
