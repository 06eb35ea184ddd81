#include <benchmark/benchmark.h>

#include "cellalg/schur.hpp"

using namespace cellalg;

static void BM_schur_build(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SchurAlgebra alg({MonoidKind::full, r}, r, r, Side::right);
        benchmark::DoNotOptimize(alg.dim());
    }
}
BENCHMARK(BM_schur_build)->Arg(2)->Arg(3)->Arg(4);

static void BM_schur_gram(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    SchurAlgebra alg({MonoidKind::full, r}, r, r, Side::right);
    for (auto _ : state) {
        GramSet g(alg.cells());
        benchmark::DoNotOptimize(g.lambda_zero(RingSpec::gf(2)).size());
    }
}
BENCHMARK(BM_schur_gram)->Arg(3)->Arg(4);

static void BM_schur_verify(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    SchurAlgebra alg({MonoidKind::full, r}, r, r, Side::left);
    for (auto _ : state) {
        AxiomCheck res = verify_cell_axioms(alg.cells());
        benchmark::DoNotOptimize(res.pass);
    }
}
BENCHMARK(BM_schur_verify)->Arg(2)->Arg(3);

static void BM_star_product_sweep(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    SchurAlgebra alg({MonoidKind::full, r}, r, r, Side::left);
    for (auto _ : state) {
        long long terms = 0;
        for (int b1 = 0; b1 < alg.dim(); ++b1)
            for (int b2 = 0; b2 < alg.dim(); ++b2) {
                if (alg.coset(b1).nu_idx != alg.coset(b2).mu_idx) continue;
                terms += static_cast<long long>(
                    alg.cells().oracle->mul_basis(b1, b2).terms.size());
            }
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_star_product_sweep)->Arg(2)->Arg(3);
