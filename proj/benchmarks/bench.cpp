#include <benchmark/benchmark.h>

#include "qlat/bc.hpp"
#include "qlat/gl2.hpp"
#include "qlat/lat2.hpp"
#include "qlat/modforms.hpp"
#include "qlat/zeta.hpp"

using namespace qlat;

static void BM_EnumerateIndex(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_index(n));
}
BENCHMARK(BM_EnumerateIndex)->Arg(60)->Arg(360)->Arg(2520);

static void BM_BCProduct(benchmark::State& state) {
    BCElement x(BCMonomial{6, QModZ(1, 12), 1});
    BCElement y(BCMonomial{1, QModZ(5, 12), 6});
    for (auto _ : state) benchmark::DoNotOptimize(bc_product(x, y));
}
BENCHMARK(BM_BCProduct);

static void BM_QSeriesMultiply(benchmark::State& state) {
    const long order = state.range(0);
    auto e4 = ek_series(4, order);
    auto e6 = ek_series(6, order);
    for (auto _ : state) benchmark::DoNotOptimize(e4 * e6);
}
BENCHMARK(BM_QSeriesMultiply)->Arg(20)->Arg(60)->Arg(120);

static void BM_HeckeConvolve(benchmark::State& state) {
    auto T = GL2Element::hecke_Tn(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(convolve(T, T));
}
BENCHMARK(BM_HeckeConvolve)->Arg(2)->Arg(6);

static void BM_GibbsPartialSum(benchmark::State& state) {
    LevelRho l{2, {1, 0, 0, 1}};
    auto ind = [](const std::array<long, 4>& m) { return ind_e(m, 2, 0, 1); };
    for (auto _ : state)
        benchmark::DoNotOptimize(kms_indicator_state(3.0, l, ind, state.range(0)));
}
BENCHMARK(BM_GibbsPartialSum)->Arg(200)->Arg(800);

static void BM_ZetaProduct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zeta_product(3.0, state.range(0)));
}
BENCHMARK(BM_ZetaProduct)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
