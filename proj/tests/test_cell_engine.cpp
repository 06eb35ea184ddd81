#include <random>

#include "cellalg/monoid_cells.hpp"
#include "doctest.h"

using namespace cellalg;

namespace {

MonoidCells build(MonoidKind kind, int r) {
    return monoid_cell_structure({kind, r}, RingSpec::integers(),
                                 SubsetOrdering::all_singletons(r));
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("cell coordinates round trip") {
    MonoidCells mc = build(MonoidKind::full, 2);
    const CellStructure& cs = mc.cs;
    CHECK(cs.dim() == 4);

    // a single cell basis element has a unit coordinate vector
    for (int cid = 0; cid < cs.dim(); ++cid) {
        auto coords = cs.to_cell_coords(cs.cell_natural(cid));
        REQUIRE(coords.size() == 1);
        CHECK(coords[0] == std::make_pair(cid, Coeff{1}));
    }
    CHECK(cs.to_cell_coords(SparseVec{}).empty());

    // random integer combinations round-trip
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        SparseVec x;
        for (int id = 0; id < cs.dim(); ++id) x.add_term(id, coeff(rng));
        x.normalize();
        auto u = cs.to_cell_coords(x);
        CHECK(cs.from_cell_coords(u) == x);
    }
}

TEST_CASE("layer coefficients") {
    MonoidCells mc = build(MonoidKind::full, 2);
    const CellStructure& cs = mc.cs;
    int li11 = cs.layer_of(P({1, 1}));
    int li2 = cs.layer_of(P({2}));

    // an element of the higher ideal vanishes at the lower layer:
    // the (2) layer sits strictly above (1,1)
    SparseVec x2 = cs.cell_natural(cs.cell_id(li2, 0, 0));
    Mat64 at11 = layer_coefficients(cs, x2, li11);
    for (const auto& row : at11)
        for (long long v : row) CHECK(v == 0);

    // a cell element is a unit in its own layer
    Mat64 self = layer_coefficients(cs, x2, li2);
    CHECK(self[0][0] == 1);
}

TEST_CASE("verify cell axioms on small structures") {
    for (auto [kind, r] : {std::pair{MonoidKind::symmetric, 3},
                           std::pair{MonoidKind::full, 2},
                           std::pair{MonoidKind::rook, 2},
                           std::pair{MonoidKind::partial, 2},
                           std::pair{MonoidKind::full, 3}}) {
        MonoidCells mc = build(kind, r);
        AxiomCheck res = verify_cell_axioms(mc.cs);
        INFO(MonoidSpec{kind, r}.to_string(), ": ", res.detail);
        CHECK(res.pass);
    }
}

TEST_CASE("negative control: corrupted poset fails with a counterexample") {
    MonoidCells mc = build(MonoidKind::symmetric, 2);
    CellStructure& cs = mc.cs;
    REQUIRE(verify_cell_axioms(cs).pass);
    int li2 = cs.layer_of(P({2}));
    int li11 = cs.layer_of(P({1, 1}));
    // flip the dominance between the two index-2 layers
    cs.layer_geq[li2][li11] = 0;
    cs.layer_geq[li11][li2] = 1;
    AxiomCheck res = verify_cell_axioms(cs);
    CHECK_FALSE(res.pass);
    CHECK(!res.detail.empty());
}

TEST_CASE("r_st values") {
    // zero-map layer of the rook monoid: z . z = z gives r = 1
    MonoidCells rook = build(MonoidKind::rook, 2);
    int li0 = rook.cs.layer_of(Partition());
    CHECK(r_st(rook.cs, li0, 0, 0) == 1);

    // lambda = (2) in Z[S_2]: the row symmetrizer squares to twice itself
    MonoidCells sym = build(MonoidKind::symmetric, 2);
    int li2 = sym.cs.layer_of(P({2}));
    CHECK(r_st(sym.cs, li2, 0, 0) == 2);
    int li11 = sym.cs.layer_of(P({1, 1}));
    CHECK(r_st(sym.cs, li11, 0, 0) == 1);

    // independence from the auxiliary pair, exhaustive over Z[T_2]
    MonoidCells t2 = build(MonoidKind::full, 2);
    for (int li = 0; li < t2.cs.num_layers(); ++li)
        for (int l = 0; l < t2.cs.Lsize(li); ++l)
            for (int t = 0; t < t2.cs.Rsize(li); ++t) {
                Coeff ref = r_st(t2.cs, li, l, t);
                for (int al = 0; al < t2.cs.Lsize(li); ++al)
                    for (int at = 0; at < t2.cs.Rsize(li); ++at)
                        CHECK(r_st(t2.cs, li, l, t, al, at) == ref);
            }
}

TEST_CASE("gram matrices") {
    MonoidCells rook = build(MonoidKind::rook, 2);
    GramReport g0 = gram_matrix(rook.cs, rook.cs.layer_of(Partition()));
    REQUIRE(g0.rows == 1);
    REQUIRE(g0.cols == 1);
    CHECK(g0.entries[0][0] == 1);

    MonoidCells t2 = build(MonoidKind::full, 2);
    GramReport g1 = gram_matrix(t2.cs, t2.cs.layer_of(P({1})));
    REQUIRE(g1.rows == 1);
    REQUIRE(g1.cols == 2);
    CHECK(g1.entries[0][0] == 1);
    CHECK(g1.entries[0][1] == 1);

    MonoidCells s2 = build(MonoidKind::symmetric, 2);
    GramReport g11 = gram_matrix(s2.cs, s2.cs.layer_of(P({1, 1})));
    CHECK(g11.entries[0][0] == 1);
}

TEST_CASE("lambda zero and dimensions") {
    MonoidCells s3 = build(MonoidKind::symmetric, 3);
    GramSet gs3(s3.cs);
    CHECK(gs3.lambda_zero(RingSpec::rationals()).size() == 3);
    auto dims3 = gs3.irreducible_dims(RingSpec::rationals());
    long long sum = 0;
    for (auto& [li, d] : dims3) sum += static_cast<long long>(d) * d;
    CHECK(sum == 6);
    CHECK(dims3[s3.cs.layer_of(P({2, 1}))] == 2);
    CHECK(gs3.quasi_hereditary_sufficient(RingSpec::rationals()));

    MonoidCells t2 = build(MonoidKind::full, 2);
    GramSet gt2(t2.cs);
    auto lz = gt2.lambda_zero(RingSpec::gf(2));
    std::vector<Partition> kept;
    for (int li : lz) kept.push_back(t2.cs.lambdas[li]);
    CHECK(std::find(kept.begin(), kept.end(), P({2})) == kept.end());
    CHECK(std::find(kept.begin(), kept.end(), P({1, 1})) != kept.end());
    CHECK(std::find(kept.begin(), kept.end(), P({1})) != kept.end());
    CHECK_FALSE(gt2.quasi_hereditary_sufficient(RingSpec::gf(2)));

    auto dims_t2 = gt2.irreducible_dims(RingSpec::rationals());
    CHECK(dims_t2.size() == 3);
    for (auto& [li, d] : dims_t2) CHECK(d == 1);

    // rank-zero layers are omitted from the dimension table
    auto dims_gf2 = gt2.irreducible_dims(RingSpec::gf(2));
    CHECK(dims_gf2.size() == 2);
    CHECK(dims_gf2.count(t2.cs.layer_of(P({2}))) == 0);

    MonoidCells r2 = build(MonoidKind::rook, 2);
    GramSet gr2(r2.cs);
    CHECK(gr2.lambda_zero(RingSpec::rationals()).size() == 4);
    CHECK(gr2.quasi_hereditary_sufficient(RingSpec::rationals()));
    long long sq = 0;
    for (auto& [li, d] : gr2.irreducible_dims(RingSpec::rationals()))
        sq += static_cast<long long>(d) * d;
    CHECK(sq == 7);  // semisimple rook algebra
}

TEST_CASE("gram over GF(p) is the integer gram reduced mod p") {
    MonoidCells t2 = build(MonoidKind::full, 2);
    GramSet g(t2.cs);
    for (int li = 0; li < t2.cs.num_layers(); ++li) {
        const GramReport& rep = g.report(li);
        for (int p : {2, 3}) {
            bool nonzero = false;
            for (const auto& row : rep.entries)
                for (const BigInt& e : row)
                    if (e % p != 0) nonzero = true;
            CHECK(nonzero == rep.nonzero_over(RingSpec::gf(p)));
        }
    }
}

TEST_CASE("action matrices") {
    MonoidCells s2 = build(MonoidKind::symmetric, 2);
    const CellStructure& cs = s2.cs;
    int li2 = cs.layer_of(P({2}));

    // identity element acts as the identity matrix
    SparseVec e = SparseVec::unit(s2.table->identity_id());
    CHECK(is_identity(action_matrix(cs, e, li2, Side::left)));

    // the swap acts as +1 on the one dimensional (2) module
    PartialMap swap;
    swap.r = 2;
    swap.img = {2, 1};
    SparseVec sw = SparseVec::unit(s2.table->id_of(swap));
    Mat64 m = action_matrix(cs, sw, li2, Side::left);
    CHECK(m[0][0] == 1);

    // representation property on all basis pairs of T_2, left side
    MonoidCells t2 = build(MonoidKind::full, 2);
    for (int li = 0; li < t2.cs.num_layers(); ++li)
        for (int a = 0; a < t2.table->size(); ++a)
            for (int b = 0; b < t2.table->size(); ++b) {
                SparseVec va = SparseVec::unit(a), vb = SparseVec::unit(b);
                Mat64 ma = action_matrix(t2.cs, va, li, Side::left);
                Mat64 mb = action_matrix(t2.cs, vb, li, Side::left);
                Mat64 mab = action_matrix(t2.cs, t2.cs.oracle->mul(va, vb), li, Side::left);
                CHECK(mab == mat_mul(ma, mb));
            }
}

TEST_CASE("two sided ideal property") {
    // support of a product with a cell element at mu stays at layers >= mu
    MonoidCells t2 = build(MonoidKind::full, 2);
    const CellStructure& cs = t2.cs;
    for (int na = 0; na < cs.dim(); ++na)
        for (int cid = 0; cid < cs.dim(); ++cid) {
            int mu = cs.cell_info(cid).layer;
            for (bool left : {true, false}) {
                SparseVec prod = left
                    ? cs.oracle->mul(SparseVec::unit(na), cs.cell_natural(cid))
                    : cs.oracle->mul(cs.cell_natural(cid), SparseVec::unit(na));
                for (const auto& [id, c] : cs.to_cell_coords(prod))
                    CHECK(cs.geq(cs.cell_info(id).layer, mu));
            }
        }
}
