#include <benchmark/benchmark.h>

#include "qmac/macroutes.hpp"
#include "qmac/qdyson.hpp"

using namespace qmac;

namespace {

void BM_expand_F(benchmark::State& state) {
    int s = static_cast<int>(state.range(0));
    int beta = static_cast<int>(state.range(1));
    std::vector<int> betas(s, beta);
    for (auto _ : state) {
        LaurentPoly f = expand_F(betas, 1, {2});
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_expand_F)->Args({2, 2})->Args({3, 1})->Args({3, 2});

void BM_to_g_basis(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int beta = static_cast<int>(state.range(1));
    SymFunc f = qn(n, beta) * qn(n - 1, beta);  // one-row functions are memoized
    for (auto _ : state) {
        auto g = to_g_basis(f, beta);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_to_g_basis)->Args({4, 1})->Args({4, 2})->Args({5, 2});

void BM_rect_route(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    int s = static_cast<int>(state.range(1));
    int beta = static_cast<int>(state.range(2));
    for (auto _ : state) {
        // the lowering route is unmemoized, so this measures full construction
        RouteResult r = mac_rect_lowering(k, s, 0, beta);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_rect_route)->Args({2, 2, 1})->Args({2, 2, 2})->Args({1, 4, 2});

void BM_ct_brute(benchmark::State& state) {
    int s = static_cast<int>(state.range(0));
    int beta = static_cast<int>(state.range(1));
    std::vector<int> betas(s, beta);
    for (auto _ : state) {
        RatFuncQ c = expand_F(betas, 0).ct();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ct_brute)->Args({3, 2})->Args({4, 1})->Args({3, 3});

}  // namespace

BENCHMARK_MAIN();
