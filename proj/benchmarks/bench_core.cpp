#include <benchmark/benchmark.h>

#include <vector>

#include "dedekind/convexfn.hpp"
#include "dedekind/cutmodel.hpp"
#include "dedekind/extreal.hpp"

namespace {

using namespace dedekind;

void BM_RationalAdd(benchmark::State& state) {
    const Rational a(355, 113), b(-217, 990);
    for (auto _ : state) {
        Rational c = a + b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_RationalAdd);

void BM_SupAddFold(benchmark::State& state) {
    std::vector<ExtReal> xs;
    for (int i = 0; i < 64; ++i)
        xs.push_back(i % 7 == 0 ? ExtReal::pos_inf() : ExtReal(Rational(i, 3)));
    for (auto _ : state) {
        ExtReal acc(Rational(0));
        for (const ExtReal& x : xs)
            acc = sup_add(acc, x);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_SupAddFold);

void BM_MinkowskiDown(benchmark::State& state) {
    const DownSet a = DownSet::open_below(Rational(7, 8));
    const DownSet b = DownSet::open_below(Rational(-3, 5));
    for (auto _ : state) {
        DownSet c = minkowski_down(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_MinkowskiDown);

void BM_GridOracleSum(benchmark::State& state) {
    const DownSet a = DownSet::open_below(Rational(1, 2));
    const DownSet b = DownSet::open_below(Rational(-1, 4));
    const GridWindow w(Rational(4), 8);
    for (auto _ : state) {
        bool ok = grid_oracle_sum(a, b, w);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_GridOracleSum);

void BM_InfConvolution(benchmark::State& state) {
    std::vector<Rational> grid;
    std::vector<ExtReal> values;
    for (int k = -8; k <= 8; ++k) {
        grid.push_back(Rational(k, 2));
        values.push_back(ExtReal(abs(Rational(k, 2))));
    }
    const ExtFn f(grid, values);
    for (auto _ : state) {
        ExtFn g = inf_convolution(f, f);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_InfConvolution);

} // namespace

BENCHMARK_MAIN();
