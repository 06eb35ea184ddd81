#include <benchmark/benchmark.h>

#include "cellalg/monoid_cells.hpp"

using namespace cellalg;

static void BM_murphy_basis(benchmark::State& state) {
    int i = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MurphyBasis mb(i);
        benchmark::DoNotOptimize(mb.rows());
    }
}
BENCHMARK(BM_murphy_basis)->Arg(4)->Arg(5);

static void BM_monoid_cell_build(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonoidCells mc = monoid_cell_structure({MonoidKind::full, r}, RingSpec::integers(),
                                               SubsetOrdering::all_singletons(r));
        benchmark::DoNotOptimize(mc.cs.dim());
    }
}
BENCHMARK(BM_monoid_cell_build)->Arg(3)->Arg(4);

static void BM_monoid_verify(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    MonoidCells mc = monoid_cell_structure({MonoidKind::full, r}, RingSpec::integers(),
                                           SubsetOrdering::all_singletons(r));
    for (auto _ : state) {
        AxiomCheck res = verify_cell_axioms(mc.cs);
        benchmark::DoNotOptimize(res.pass);
    }
}
BENCHMARK(BM_monoid_verify)->Arg(3)->Arg(4);

static void BM_monoid_gram(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    MonoidCells mc = monoid_cell_structure({MonoidKind::full, r}, RingSpec::integers(),
                                           SubsetOrdering::all_singletons(r));
    for (auto _ : state) {
        GramSet g(mc.cs);
        benchmark::DoNotOptimize(g.lambda_zero(RingSpec::gf(2)).size());
    }
}
BENCHMARK(BM_monoid_gram)->Arg(3)->Arg(4);
