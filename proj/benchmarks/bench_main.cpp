#include <benchmark/benchmark.h>

#include <keypoly/families.hpp>
#include <keypoly/elimination.hpp>
#include <keypoly/sturm.hpp>

using namespace keypoly;

static void BM_KeyPolyRecursion(benchmark::State & state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = key_poly(CurveFamily::legendre(), n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_KeyPolyRecursion)->Arg(4)->Arg(8)->Arg(12);

static void BM_DeterminantKeyPoly(benchmark::State & state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = gen_key_poly_det(CurveFamily::legendre(), 2, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_DeterminantKeyPoly)->Arg(3)->Arg(5)->Arg(7);

static void BM_DiscriminantInterp(benchmark::State & state) {
    int n = static_cast<int>(state.range(0));
    auto p = key_poly(CurveFamily::legendre(), n);
    for (auto _ : state) {
        auto d = discriminant_x(p);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DiscriminantInterp)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SturmIsolation(benchmark::State & state) {
    int n = static_cast<int>(state.range(0));
    auto p = key_poly(CurveFamily::legendre(), n);
    auto d = discriminant_x(p).nested_x()[0];
    for (auto _ : state) {
        auto roots = isolate_roots(squarefree_part(d));
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_SturmIsolation)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
