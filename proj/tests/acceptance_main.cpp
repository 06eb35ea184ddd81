// Acceptance suite: one line per criterion, exit 0 iff everything passed.
// --slow adds the large-rank tiers (T_4 monoid axioms, T_4 modular runs).

#include <chrono>
#include <cstring>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "cellalg/monoid_cells.hpp"
#include "cellalg/report.hpp"
#include "cellalg/schur.hpp"
#include "cellalg/theory.hpp"

using namespace cellalg;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass,
            clock_type::time_point t0, const std::string& detail = "") {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0)
                  .count();
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": "
              << name << " (" << ms << " ms)";
    if (!pass && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::set<std::vector<int>> as_set(const std::vector<Partition>& v) {
    std::set<std::vector<int>> s;
    for (const auto& p : v) s.insert(p.parts());
    return s;
}

std::set<std::vector<int>> lambda0_parts(const CellStructure& cs, const GramSet& g,
                                         const RingSpec& field) {
    std::set<std::vector<int>> s;
    for (int li : g.lambda_zero(field)) s.insert(cs.lambdas[li].parts());
    return s;
}

// ---- criterion 1: factorization bijection over PT_r, r <= 4 ----
void criterion1() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    for (int r = 1; r <= 4 && pass; ++r) {
        SubsetOrdering ord = SubsetOrdering::all_singletons(r);
        auto maps = enumerate_monoid({MonoidKind::partial, r});
        std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<SubsetMask>>>
            triples;
        for (const auto& a : maps) {
            Factorization f = factorize(a, ord);
            if (!(assemble(f, r) == a)) {
                pass = false;
                detail = "assemble(factorize) misses " + a.to_string();
                break;
            }
            triples.insert({f.sigma.images(), f.C.elems, f.D.blocks});
        }
        if (pass && triples.size() != maps.size()) {
            pass = false;
            detail = "triples not unique at r=" + std::to_string(r);
        }
    }
    report(1, "factorization bijection over PT_r, r <= 4", pass, t0, detail);
}

// ---- criterion 2: monoid cell axioms over Z ----
void criterion2(bool slow) {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    std::vector<std::pair<MonoidKind, int>> configs;
    for (int r = 1; r <= 3; ++r) {
        configs.push_back({MonoidKind::full, r});
        configs.push_back({MonoidKind::rook, r});
        configs.push_back({MonoidKind::partial, r});
    }
    configs.push_back({MonoidKind::symmetric, 4});  // Murphy structure on Z[S_4]
    for (auto [kind, r] : configs) {
        MonoidCells mc = monoid_cell_structure({kind, r}, RingSpec::integers(),
                                               SubsetOrdering::all_singletons(r));
        AxiomCheck res = verify_cell_axioms(mc.cs);
        if (!res.pass) {
            pass = false;
            detail = MonoidSpec{kind, r}.to_string() + ": " + res.detail;
            break;
        }
    }
    report(2, "monoid cell axioms over Z (T,R,PT up to rank 3)", pass, t0, detail);

    if (slow) {
        auto t1 = clock_type::now();
        MonoidCells t4 = monoid_cell_structure({MonoidKind::full, 4}, RingSpec::integers(),
                                               SubsetOrdering::all_singletons(4));
        AxiomCheck res = verify_cell_axioms(t4.cs);
        report(2, "monoid cell axioms over Z, T_4 (slow tier)", res.pass, t1, res.detail);
    }
}

// ---- criterion 3: radical equivalence ----
void criterion3() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    std::vector<RingSpec> fields{RingSpec::rationals(), RingSpec::gf(2), RingSpec::gf(3)};
    for (auto kind : {MonoidKind::full, MonoidKind::rook})
        for (int r = 1; r <= 3 && pass; ++r) {
            MonoidCells mc = monoid_cell_structure({kind, r}, RingSpec::integers(),
                                                   SubsetOrdering::all_singletons(r));
            std::map<int, MonoidCells> sym;
            for (int li = 0; li < mc.cs.num_layers() && pass; ++li) {
                const Partition& lam = mc.cs.lambdas[li];
                if (lam.index() < 1) continue;
                if (!sym.count(lam.index()))
                    sym.emplace(lam.index(),
                                monoid_cell_structure(
                                    {MonoidKind::symmetric, lam.index()},
                                    RingSpec::integers(),
                                    SubsetOrdering::all_singletons(lam.index())));
                for (const RingSpec& field : fields) {
                    auto rq = radical_equivalence_check(mc, sym.at(lam.index()), field, lam);
                    if (!rq.equivalent) {
                        pass = false;
                        detail = MonoidSpec{kind, r}.to_string() + " " + field.to_string() +
                                 " " + lam.to_string();
                        break;
                    }
                }
            }
        }
    report(3, "radical equivalence monoid vs symmetric side", pass, t0, detail);
}

// ---- criteria 4 + 5: schur axioms, integrality, identity ----
void criteria45() {
    auto t0 = clock_type::now();
    bool ax_pass = true, int_pass = true;
    std::string ax_detail, int_detail;
    for (auto kind : {MonoidKind::full, MonoidKind::rook})
        for (int r = 2; r <= 3; ++r)
            for (auto side : {Side::left, Side::right}) {
                SchurAlgebra alg({kind, r}, r, r, side);
                AxiomCheck res = verify_cell_axioms(alg.cells());
                if (!res.pass && ax_pass) {
                    ax_pass = false;
                    ax_detail = MonoidSpec{kind, r}.to_string() +
                                (side == Side::left ? " left: " : " right: ") + res.detail;
                }
                try {
                    // the star product asserts integrality on every emitted
                    // coefficient; sweep all matched basis pairs
                    for (int b1 = 0; b1 < alg.dim(); ++b1)
                        for (int b2 = 0; b2 < alg.dim(); ++b2) {
                            if (alg.coset(b1).nu_idx != alg.coset(b2).mu_idx) continue;
                            (void)alg.cells().oracle->mul_basis(b1, b2);
                        }
                    const SparseVec& e = alg.identity_element();
                    for (int bid = 0; bid < alg.dim(); ++bid) {
                        SparseVec b = SparseVec::unit(bid);
                        if (!(alg.star_product(e, b) == b) ||
                            !(alg.star_product(b, e) == b))
                            throw std::logic_error("identity fails on basis element");
                    }
                } catch (const std::exception& ex) {
                    if (int_pass) {
                        int_pass = false;
                        int_detail = MonoidSpec{kind, r}.to_string() + ": " + ex.what();
                    }
                }
            }
    report(4, "schur cell axioms over Z (T_r, R_r; r = n in {2,3}; both sides)", ax_pass,
           t0, ax_detail);
    report(5, "star-product integrality and two-sided identity", int_pass, t0, int_detail);
}

// ---- criterion 6: characteristic 0 theorem ----
void criterion6() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    for (int r = 1; r <= 3 && pass; ++r)
        for (auto side : {Side::left, Side::right}) {
            SchurAlgebra alg({MonoidKind::full, r}, r, r, side);
            GramSet g(alg.cells());
            auto got = lambda0_parts(alg.cells(), g, RingSpec::rationals());
            auto want = as_set(full_lambda(MonoidKind::full, r));
            if (got != want || !g.quasi_hereditary_sufficient(RingSpec::rationals())) {
                pass = false;
                detail = "T_" + std::to_string(r) +
                         (side == Side::left ? " left" : " right");
                break;
            }
        }
    report(6, "characteristic 0: lambda0 is the full poset, quasi-hereditary", pass, t0,
           detail);
}

// ---- criteria 7 + 8: modular theorems at r = 3 (fast) and r = 4 (slow) ----
void criteria78(bool slow) {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    {
        SchurAlgebra right({MonoidKind::full, 3}, 3, 3, Side::right);
        GramSet g(right.cells());
        if (lambda0_parts(right.cells(), g, RingSpec::gf(2)) !=
            as_set(lambda_p_set(3, 2))) {
            pass = false;
            detail = "S_R(T_3, GF(2))";
        }
        if (lambda0_parts(right.cells(), g, RingSpec::gf(3)) !=
            as_set(lambda_p_set(3, 3))) {
            pass = false;
            detail = "S_R(T_3, GF(3))";
        }
    }
    report(7, "right modular theorem: lambda0 of S_R(T_3) matches Lambda_p", pass, t0,
           detail);

    auto t1 = clock_type::now();
    bool lpass = true;
    std::string ldetail;
    {
        SchurAlgebra left({MonoidKind::full, 3}, 3, 3, Side::left);
        GramSet g(left.cells());
        if (lambda0_parts(left.cells(), g, RingSpec::gf(2)) !=
            as_set(lambda_Lp_set(3, 2))) {
            lpass = false;
            ldetail = "S_L(T_3, GF(2))";
        }
    }
    report(8, "left modular theorem: lambda0 of S_L(T_3) matches Lambda_Lp", lpass, t1,
           ldetail);

    if (slow) {
        auto t2 = clock_type::now();
        bool spass = true;
        std::string sdetail;
        SchurAlgebra right({MonoidKind::full, 4}, 4, 4, Side::right);
        GramSet gr(right.cells());
        auto right_set = lambda0_parts(right.cells(), gr, RingSpec::gf(2));
        if (right_set != as_set(lambda_p_set(4, 2)) || !right_set.count({2})) {
            spass = false;
            sdetail = "S_R(T_4, GF(2))";
        }
        report(7, "right modular theorem at T_4, GF(2): full poset incl. (2) (slow tier)",
               spass, t2, sdetail);

        auto t3 = clock_type::now();
        bool s8 = true;
        std::string d8;
        SchurAlgebra left({MonoidKind::full, 4}, 4, 4, Side::left);
        GramSet gl(left.cells());
        auto left_set = lambda0_parts(left.cells(), gl, RingSpec::gf(2));
        if (left_set != as_set(lambda_Lp_set(4, 2)) || left_set.count({2})) {
            s8 = false;
            d8 = "S_L(T_4, GF(2))";
        }
        report(8, "left/right separation at T_4, GF(2): left drops (2) (slow tier)", s8,
               t3, d8);
    }
}

// ---- criterion 9: rook theorem ----
void criterion9() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    std::vector<RingSpec> fields{RingSpec::rationals(), RingSpec::gf(2), RingSpec::gf(3)};
    for (int r = 1; r <= 3 && pass; ++r)
        for (auto side : {Side::left, Side::right}) {
            SchurAlgebra alg({MonoidKind::rook, r}, r, r, side);
            GramSet g(alg.cells());
            auto want = as_set(full_lambda(MonoidKind::rook, r));
            for (const RingSpec& field : fields)
                if (lambda0_parts(alg.cells(), g, field) != want) {
                    pass = false;
                    detail = "R_" + std::to_string(r) + " " + field.to_string();
                }
        }
    report(9, "rook theorem: lambda0 is the full poset incl. the empty layer", pass, t0,
           detail);
}

// ---- criterion 10: witness brackets ----
void criterion10() {
    struct KindRun {
        WitnessKind kind;
        std::vector<int> primes;  // empty means characteristic 0
    };
    std::vector<KindRun> runs{{WitnessKind::char0_full, {}},
                              {WitnessKind::right_p, {2, 3}},
                              {WitnessKind::left_top, {}},
                              {WitnessKind::left_p, {2, 3}},
                              {WitnessKind::rook, {}}};
    for (const KindRun& run : runs) {
        auto t0 = clock_type::now();
        bool pass = true;
        std::string detail;
        std::vector<int> primes = run.primes.empty() ? std::vector<int>{0} : run.primes;
        for (int r = 1; r <= 4 && pass; ++r) {
            MonoidKind mk = witness_monoid(run.kind);
            SchurAlgebra alg({mk, r}, r, r, witness_side(run.kind));
            for (int p : primes) {
                int characteristic = p;
                for (const Partition& lam : witness_admissible(run.kind, r, p)) {
                    WitnessResult w =
                        witness_bracket(alg, run.kind, lam, p, characteristic);
                    if (!w.agree || !(w.computed == w.expected)) {
                        pass = false;
                        detail = "r=" + std::to_string(r) + " p=" + std::to_string(p) +
                                 " lambda=" + lam.to_string() + " expected " +
                                 w.expected.get_str() + " got " + w.computed.get_str();
                        break;
                    }
                }
            }
        }
        report(10, "witness brackets, kind " + to_string(run.kind) + ", r <= 4", pass, t0,
               detail);
    }
}

// ---- criterion 11: counting bijection and p-adic roundtrip ----
void criterion11() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    for (int r = 1; r <= 6 && pass; ++r)
        for (int p : {2, 3}) {
            if (count_irreducible_data(r, p, Side::right) !=
                static_cast<long long>(lambda_p_set(r, p).size())) {
                pass = false;
                detail = "right count r=" + std::to_string(r) + " p=" + std::to_string(p);
            }
            if (count_irreducible_data(r, p, Side::left) !=
                static_cast<long long>(lambda_Lp_set(r, p).size())) {
                pass = false;
                detail = "left count r=" + std::to_string(r) + " p=" + std::to_string(p);
            }
        }
    for (int n = 1; n <= 12 && pass; ++n)
        for (int p : {2, 3, 5})
            for (const Partition& lam : partitions_of(n)) {
                PAdicDecomposition dec = p_adic_decompose(lam, p);
                if (!(p_adic_reconstruct(dec) == lam) || dec.m != k_p(lam, p)) {
                    pass = false;
                    detail = "roundtrip " + lam.to_string() + " p=" + std::to_string(p);
                    break;
                }
            }
    report(11, "counting bijection and p-adic roundtrip", pass, t0, detail);
}

// ---- criterion 12: semisimple cross-checks ----
void criterion12() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    for (int i = 1; i <= 4; ++i) {
        MonoidCells sym = monoid_cell_structure({MonoidKind::symmetric, i},
                                                RingSpec::integers(),
                                                SubsetOrdering::all_singletons(i));
        GramSet g(sym.cs);
        long long sum = 0;
        for (auto& [li, d] : g.irreducible_dims(RingSpec::rationals()))
            sum += static_cast<long long>(d) * d;
        if (sum != factorial(i)) {
            pass = false;
            detail = "S_" + std::to_string(i) + " sum " + std::to_string(sum);
        }
    }
    std::map<int, long long> rook_size{{2, 7}, {3, 34}};
    for (int r = 2; r <= 3; ++r) {
        MonoidCells rook = monoid_cell_structure({MonoidKind::rook, r},
                                                 RingSpec::integers(),
                                                 SubsetOrdering::all_singletons(r));
        GramSet g(rook.cs);
        long long sum = 0;
        for (auto& [li, d] : g.irreducible_dims(RingSpec::rationals()))
            sum += static_cast<long long>(d) * d;
        if (sum != rook_size[r]) {
            pass = false;
            detail = "R_" + std::to_string(r) + " sum " + std::to_string(sum);
        }
    }
    report(12, "semisimple dimension counts (Q[S_i], Q[R_r])", pass, t0, detail);
}

// ---- criterion 13: ordering robustness ----
void criterion13() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    // monoid axioms and lambda0 under the default and a nu-dependent ordering
    for (int r = 2; r <= 3 && pass; ++r) {
        std::vector<SubsetOrdering> ords{SubsetOrdering::all_singletons(r),
                                         SubsetOrdering::with_nu(r, Composition({r}))};
        std::set<std::vector<int>> ref;
        for (std::size_t k = 0; k < ords.size(); ++k) {
            MonoidCells mc =
                monoid_cell_structure({MonoidKind::full, r}, RingSpec::integers(), ords[k]);
            AxiomCheck res = verify_cell_axioms(mc.cs);
            if (!res.pass) {
                pass = false;
                detail = "monoid axioms under ordering " + std::to_string(k);
                break;
            }
            GramSet g(mc.cs);
            auto lz = lambda0_parts(mc.cs, g, RingSpec::gf(2));
            if (k == 0)
                ref = lz;
            else if (lz != ref) {
                pass = false;
                detail = "monoid lambda0 differs across orderings";
            }
        }
    }
    // schur char-0 lambda0 under the standard and the reversed compatible order
    for (int r = 2; r <= 3 && pass; ++r)
        for (auto side : {Side::left, Side::right}) {
            std::set<std::vector<int>> ref;
            for (bool reversed : {false, true}) {
                SchurAlgebra alg({MonoidKind::full, r}, r, r, side, reversed);
                AxiomCheck res = verify_cell_axioms(alg.cells());
                if (!res.pass) {
                    pass = false;
                    detail = "schur axioms under reversed ordering";
                    break;
                }
                GramSet g(alg.cells());
                auto lz = lambda0_parts(alg.cells(), g, RingSpec::rationals());
                if (!reversed)
                    ref = lz;
                else if (lz != ref) {
                    pass = false;
                    detail = "schur lambda0 differs across orderings";
                }
            }
        }
    report(13, "ordering robustness: axioms and lambda0 stable across subset orders",
           pass, t0, detail);
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    criterion1();
    criterion2(slow);
    criterion3();
    criteria45();
    criterion6();
    criteria78(slow);
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();

    if (failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance check(s) failed" << std::endl;
    return 1;
}
