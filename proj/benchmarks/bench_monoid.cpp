#include <benchmark/benchmark.h>

#include "cellalg/monoid.hpp"

using namespace cellalg;

static void BM_enumerate_monoid(benchmark::State& state) {
    MonoidSpec spec{MonoidKind::partial, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        auto maps = enumerate_monoid(spec);
        benchmark::DoNotOptimize(maps);
    }
}
BENCHMARK(BM_enumerate_monoid)->Arg(3)->Arg(4)->Arg(5);

static void BM_factorize_all(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    auto maps = enumerate_monoid({MonoidKind::partial, r});
    SubsetOrdering ord = SubsetOrdering::all_singletons(r);
    for (auto _ : state)
        for (const auto& a : maps) {
            Factorization f = factorize(a, ord);
            benchmark::DoNotOptimize(f);
        }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(maps.size()));
}
BENCHMARK(BM_factorize_all)->Arg(3)->Arg(4);

static void BM_monoid_table(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonoidTable tab({MonoidKind::full, r}, SubsetOrdering::all_singletons(r));
        benchmark::DoNotOptimize(tab.size());
    }
}
BENCHMARK(BM_monoid_table)->Arg(3)->Arg(4);
