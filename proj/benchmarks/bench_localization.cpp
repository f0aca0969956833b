#include <benchmark/benchmark.h>

#include "invloci/bott.hpp"
#include "invloci/grassmann.hpp"
#include "invloci/interpolate.hpp"
#include "invloci/symfun.hpp"

using namespace invloci;

static void BM_ConicDegree(benchmark::State& state) {
    WeightVector w{0, 1, 3};
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conic_degree(d, w));
}
BENCHMARK(BM_ConicDegree)->Arg(2)->Arg(9)->Arg(17);

static void BM_PlaneDegree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WeightVector w = default_plane_weights(n);
    for (auto _ : state) benchmark::DoNotOptimize(plane_degree(n / 2, n, 4, w));
}
BENCHMARK(BM_PlaneDegree)->Arg(3)->Arg(5)->Arg(7);

static void BM_ChernFromWeights(benchmark::State& state) {
    WeightVector w{0, 1, 3};
    auto ws = monomial_weights(static_cast<int>(state.range(0)), {0, 1, 2}, w, -3);
    for (auto _ : state) benchmark::DoNotOptimize(chern_from_weights(ws, 5));
}
BENCHMARK(BM_ChernFromWeights)->Arg(8)->Arg(17)->Arg(40);

static void BM_ConicFormulaRecovery(benchmark::State& state) {
    WeightVector w{0, 1, 3};
    DegreeFamily fam = conic_family(w);
    for (auto _ : state) {
        auto r = sample_and_interpolate(fam, 2, 17);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ConicFormulaRecovery);

BENCHMARK_MAIN();
