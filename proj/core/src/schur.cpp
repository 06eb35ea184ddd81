#include "cellalg/schur.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cellalg {

namespace {

SubsetMask apply_perm_mask(const Permutation& p, SubsetMask d) {
    SubsetMask out = 0;
    for (int x : mask_elements(d)) out |= SubsetMask{1} << p(x - 1);
    return out;
}

std::vector<Permutation> young_generators(const Composition& mu) {
    std::vector<Permutation> gens;
    int n = mu.weight();
    for (int j = 1; j <= mu.size(); ++j) {
        auto [lo, hi] = mu.block_range(j);
        for (int x = lo; x + 1 < hi; ++x) {
            std::vector<int> img(n);
            for (int k = 0; k < n; ++k) img[k] = k;
            std::swap(img[x - 1], img[x]);
            gens.emplace_back(img);
        }
    }
    return gens;
}

}  // namespace

OrbitC orbit_of_C(const Composition& mu, const IndexSubset& C) {
    OrbitC o;
    o.mu = mu;
    std::set<std::vector<int>> seen;
    std::vector<SubsetMask> queue{C.mask()};
    seen.insert(C.elems);
    auto gens = young_generators(mu);
    while (!queue.empty()) {
        SubsetMask cur = queue.back();
        queue.pop_back();
        for (const Permutation& g : gens) {
            SubsetMask nxt = apply_perm_mask(g, cur);
            auto elems = mask_elements(nxt);
            if (seen.insert(elems).second) queue.push_back(nxt);
        }
    }
    for (const auto& e : seen) o.members.push_back(IndexSubset{e});
    std::vector<int> counts(mu.size(), 0);
    for (int x : C.elems) counts[mu.block_of(x) - 1]++;
    o.comp = Composition(counts);
    return o;
}

OrbitD orbit_of_D(const Composition& nu, const BlockFamily& D, const SubsetOrdering& ord) {
    OrbitD o;
    o.nu = nu;
    std::set<std::vector<SubsetMask>> seen;
    auto canon = [&](const std::vector<SubsetMask>& blocks) {
        return make_block_family(blocks, ord).blocks;
    };
    std::vector<std::vector<SubsetMask>> queue{canon(D.blocks)};
    seen.insert(queue[0]);
    auto gens = young_generators(nu);
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (const Permutation& g : gens) {
            std::vector<SubsetMask> nxt;
            // right action D pi = { pi^-1(b) }; the generators are involutions
            for (SubsetMask b : cur) nxt.push_back(apply_perm_mask(g.inverse(), b));
            nxt = canon(nxt);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    for (const auto& blocks : seen) o.members.push_back(BlockFamily{blocks});
    std::sort(o.members.begin(), o.members.end(),
              [&](const BlockFamily& a, const BlockFamily& b) {
                  std::vector<int> ka, kb;
                  for (SubsetMask m : a.blocks) ka.push_back(ord.rank(m));
                  for (SubsetMask m : b.blocks) kb.push_back(ord.rank(m));
                  return ka < kb;
              });
    std::vector<int> counts(ord.num_orbits(), 0);
    for (SubsetMask b : o.members[0].blocks) counts[ord.orbit_id(b) - 1]++;
    o.comp = Composition(counts);
    return o;
}

Permutation intertwiner_rho_C(const Composition& mu, const IndexSubset& C,
                              const Permutation& rho) {
    if (!in_young_subgroup(rho, mu))
        throw std::invalid_argument("intertwiner_rho_C: rho not in S_mu");
    int i = C.size();
    std::vector<int> rhoC;
    for (int c : C.elems) rhoC.push_back(rho(c - 1) + 1);
    std::sort(rhoC.begin(), rhoC.end());
    std::vector<int> img(i);
    for (int k = 0; k < i; ++k) {
        int target = rho(C.elems[k] - 1) + 1;
        img[k] = static_cast<int>(
            std::lower_bound(rhoC.begin(), rhoC.end(), target) - rhoC.begin());
    }
    Permutation rho_C(img);
    for (int j = 1; j <= i; ++j)
        if (rho(C.elems[j - 1] - 1) + 1 != rhoC[rho_C(j - 1)])
            throw std::logic_error("intertwiner_rho_C: pointwise identity fails");
    std::vector<int> counts(mu.size(), 0);
    for (int x : C.elems) counts[mu.block_of(x) - 1]++;
    if (!in_young_subgroup(rho_C, Composition(counts)))
        throw std::logic_error("intertwiner_rho_C: rho_C escapes S_{mu(C)}");
    return rho_C;
}

Permutation intertwiner_pi_D(const Composition& nu, const BlockFamily& D,
                             const Permutation& pi, const SubsetOrdering& ord) {
    if (!in_young_subgroup(pi, nu))
        throw std::invalid_argument("intertwiner_pi_D: pi not in S_nu");
    int i = D.size();
    Permutation pinv = pi.inverse();
    std::vector<SubsetMask> transformed;
    for (SubsetMask b : D.blocks) transformed.push_back(apply_perm_mask(pinv, b));
    BlockFamily Dpi = make_block_family(transformed, ord);
    std::vector<int> img(i, -1);
    for (int j = 0; j < i; ++j) {
        auto it = std::find(Dpi.blocks.begin(), Dpi.blocks.end(), transformed[j]);
        img[static_cast<int>(it - Dpi.blocks.begin())] = j;
    }
    Permutation pi_D(img);
    IndexedMap psiD = psi_map(D, nu.weight());
    IndexedMap psiDpi = psi_map(Dpi, nu.weight());
    for (int x = 1; x <= nu.weight(); ++x) {
        int lhs = psiD(pi(x - 1) + 1);
        int rhs_in = psiDpi(x);
        int rhs = rhs_in == 0 ? 0 : pi_D(rhs_in - 1) + 1;
        if (lhs != rhs)
            throw std::logic_error("intertwiner_pi_D: pointwise identity fails");
    }
    std::vector<int> counts(ord.num_orbits(), 0);
    for (SubsetMask b : D.blocks) counts[ord.orbit_id(b) - 1]++;
    if (!in_young_subgroup(pi_D, Composition(counts)))
        throw std::logic_error("intertwiner_pi_D: pi_D escapes S_{nu(D)}");
    return pi_D;
}

std::vector<CosetPiece> coset_decomposition(const Composition& mu, const Composition& nu,
                                            const PartialMap& alpha,
                                            const SubsetOrdering& ord) {
    int r = alpha.r;
    Factorization f = factorize(alpha, ord);
    OrbitC oc = orbit_of_C(mu, f.C);
    OrbitD od = orbit_of_D(nu, f.D, ord);

    std::vector<Permutation> kappa = young_subgroup(oc.comp);
    std::vector<CosetPiece> pieces;
    std::set<PartialMap> all;
    std::size_t piece_size = 0;
    for (const auto& C : oc.members)
        for (const auto& D : od.members) {
            std::vector<int> counts(ord.num_orbits(), 0);
            for (SubsetMask b : D.blocks) counts[ord.orbit_id(b) - 1]++;
            std::vector<Permutation> gamma = young_subgroup(Composition(counts));
            CosetPiece piece;
            piece.C = C;
            piece.D = D;
            std::set<PartialMap> mem;
            for (const Permutation& k : kappa)
                for (const Permutation& g : gamma)
                    mem.insert(assemble_map(C, k * f.sigma * g, D, r));
            piece.members.assign(mem.begin(), mem.end());
            if (pieces.empty()) piece_size = piece.members.size();
            if (piece.members.size() != piece_size)
                throw std::logic_error("coset_decomposition: piece sizes differ");
            for (const auto& m : piece.members)
                if (!all.insert(m).second)
                    throw std::logic_error("coset_decomposition: pieces overlap");
            pieces.push_back(std::move(piece));
        }

    std::set<PartialMap> coset;
    for (const Permutation& u : young_subgroup(mu))
        for (const Permutation& v : young_subgroup(nu))
            coset.insert(compose(compose(PartialMap::from_permutation(u), alpha),
                                 PartialMap::from_permutation(v)));
    if (coset != all) throw std::logic_error("coset_decomposition: union mismatch");
    return pieces;
}

const SummandType& summand_type(int i, const Composition& a, const Composition& b) {
    static std::mutex mtx;
    static std::map<std::tuple<int, std::vector<int>, std::vector<int>>,
                    std::unique_ptr<SummandType>>
        cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(i, a.parts(), b.parts());
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto ty = std::make_unique<SummandType>();
    ty->i = i;
    ty->a = a;
    ty->b = b;
    const MurphyBasis& mb = murphy_basis(i);
    const auto& group = mb.group();
    int order = static_cast<int>(group.size());

    std::vector<Permutation> gensA = young_generators(a), gensB = young_generators(b);
    std::vector<int> coset_of(order, -1);
    for (int p = 0; p < order; ++p) {
        if (coset_of[p] >= 0) continue;
        int cid = static_cast<int>(ty->scosets.size());
        std::vector<int> stack{p}, members{p};
        coset_of[p] = cid;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            auto visit = [&](const Permutation& q) {
                int qid = mb.perm_id(q);
                if (coset_of[qid] < 0) {
                    coset_of[qid] = cid;
                    members.push_back(qid);
                    stack.push_back(qid);
                }
            };
            for (const Permutation& g : gensA) visit(g * group[cur]);
            for (const Permutation& g : gensB) visit(group[cur] * g);
        }
        std::sort(members.begin(), members.end());
        ty->scosets.push_back(std::move(members));
    }

    ty->shapes = partitions_of(i);
    for (std::size_t si = 0; si < ty->shapes.size(); ++si) {
        ty->tabs_a.push_back(semistandard_tableaux(ty->shapes[si], a));
        ty->tabs_b.push_back(semistandard_tableaux(ty->shapes[si], b));
    }

    for (std::size_t si = 0; si < ty->shapes.size(); ++si) {
        const auto& std_tabs = mb.tableaux(static_cast<int>(si));
        std::vector<std::vector<std::vector<int>>> wa, wb;
        for (const auto& t : std_tabs) {
            wa.push_back(weight_filling(t, a));
            wb.push_back(weight_filling(t, b));
        }
        for (std::size_t S = 0; S < ty->tabs_a[si].size(); ++S)
            for (std::size_t T = 0; T < ty->tabs_b[si].size(); ++T) {
                std::vector<long long> vec(order, 0);
                for (std::size_t s = 0; s < std_tabs.size(); ++s) {
                    if (wa[s] != ty->tabs_a[si][S].rows()) continue;
                    for (std::size_t t = 0; t < std_tabs.size(); ++t) {
                        if (wb[t] != ty->tabs_b[si][T].rows()) continue;
                        int row = mb.row_of(static_cast<int>(si), static_cast<int>(s),
                                            static_cast<int>(t));
                        for (int p = 0; p < order; ++p) vec[p] += mb.fwd()[row][p];
                    }
                }
                std::vector<long long> on_coset(ty->scosets.size());
                for (std::size_t c = 0; c < ty->scosets.size(); ++c) {
                    long long v = vec[ty->scosets[c][0]];
                    for (int m : ty->scosets[c])
                        if (vec[m] != v)
                            throw std::logic_error("summand_type: element not bi-invariant");
                    on_coset[c] = v;
                }
                ty->rows.push_back(
                    {static_cast<int>(si), static_cast<int>(S), static_cast<int>(T)});
                ty->fwd.push_back(std::move(on_coset));
            }
    }
    if (ty->rows.size() != ty->scosets.size())
        throw std::logic_error("summand_type: semistandard count differs from coset count");
    Mat64 ft(ty->rows.size(), std::vector<long long>(ty->rows.size()));
    for (std::size_t c = 0; c < ty->rows.size(); ++c)
        for (std::size_t n = 0; n < ty->rows.size(); ++n) ft[n][c] = ty->fwd[c][n];
    ty->conv = inverse_unimodular(ft);

    auto& ref = *ty;
    cache.emplace(std::move(key), std::move(ty));
    return ref;
}

struct SchurAlgebra::Core {
    MonoidSpec spec;
    int r = 0, n = 0;
    bool reversed = false;
    std::shared_ptr<const MonoidTable> mono;
    std::vector<Composition> comps;
    std::vector<SubsetOrdering> ords;
    std::vector<std::vector<int>> subgroup_ids;
    std::vector<std::vector<int>> gen_ids;
    std::vector<std::vector<std::vector<OrbitC>>> orbC;
    std::vector<std::vector<std::vector<int>>> orbC_of;
    std::vector<std::vector<std::vector<OrbitD>>> orbD;
    std::vector<std::vector<std::vector<int>>> orbD_of;
    std::vector<std::vector<int>> cpos;  // [i][mask] -> subset position
    std::vector<DoubleCoset> cosets;
    std::vector<std::vector<int>> pair_bids;
    std::vector<std::vector<int>> elem_coset;

    mutable std::mutex memo_mtx;
    mutable std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> memo;
    mutable std::size_t memo_terms = 0;

    int ncomps() const { return static_cast<int>(comps.size()); }
    int pair_idx(int mu, int nu) const { return mu * ncomps() + nu; }
    const std::vector<std::pair<int, long long>>& expand(int b1, int b2) const;
};

namespace {

class SchurOracle final : public ProductOracle {
public:
    SchurOracle(std::shared_ptr<SchurAlgebra::Core> core, Side side)
        : core_(std::move(core)), side_(side) {}

    int dimension() const override { return static_cast<int>(core_->cosets.size()); }

    SparseVec mul_basis(int b1, int b2) const override {
        const DoubleCoset& c1 = core_->cosets[b1];
        const DoubleCoset& c2 = core_->cosets[b2];
        if (c1.nu_idx != c2.mu_idx) return {};
        SparseVec out;
        for (const auto& [bid, a] : core_->expand(b1, b2)) {
            const DoubleCoset& c = core_->cosets[bid];
            long long num, den;
            if (side_ == Side::left) {
                num = checked_mul(a, c.nL);
                den = checked_mul(c1.nL, c2.nL);
            } else {
                num = checked_mul(a, c.nR);
                den = checked_mul(c1.nR, c2.nR);
            }
            if (num % den != 0)
                throw std::logic_error("star product: non-integral structure constant");
            out.add_term(bid, num / den);
        }
        out.normalize();
        return out;
    }

private:
    std::shared_ptr<SchurAlgebra::Core> core_;
    Side side_;
};

}  // namespace

const std::vector<std::pair<int, long long>>& SchurAlgebra::Core::expand(int b1,
                                                                         int b2) const {
    std::lock_guard<std::mutex> lock(memo_mtx);
    auto key = std::make_pair(b1, b2);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const DoubleCoset& c1 = cosets[b1];
    const DoubleCoset& c2 = cosets[b2];
    std::vector<long long> counts(mono->size(), 0);
    for (int m1 : c1.members)
        for (int m2 : c2.members) counts[mono->mul(m1, m2)] += 1;

    int pair = pair_idx(c1.mu_idx, c2.nu_idx);
    std::vector<std::pair<int, long long>> out;
    std::set<int> touched;
    for (int e = 0; e < mono->size(); ++e)
        if (counts[e] != 0) touched.insert(elem_coset[pair][e]);
    for (int bid : touched) {
        const DoubleCoset& c = cosets[bid];
        long long v = counts[c.members[0]];
        for (int m : c.members)
            if (counts[m] != v)
                throw std::logic_error("ordinary product: not constant on a double coset");
        out.emplace_back(bid, v);
    }
    std::sort(out.begin(), out.end());

    if (memo_terms > (std::size_t{1} << 24)) {
        memo.clear();
        memo_terms = 0;
    }
    memo_terms += out.size() + 1;
    return memo.emplace(key, std::move(out)).first->second;
}

SchurAlgebra::SchurAlgebra(MonoidSpec spec, int r, int n, Side side, bool reversed_ordering)
    : side_(side) {
    if (n < r) throw std::invalid_argument("SchurAlgebra: requires n >= r");
    if (r < 1 || r > 4 || n > 6)
        throw std::invalid_argument("SchurAlgebra: size out of supported bounds");
    if (spec.r != r) throw std::invalid_argument("SchurAlgebra: spec rank mismatch");

    core_ = std::make_shared<Core>();
    Core& C = *core_;
    C.spec = spec;
    C.r = r;
    C.n = n;
    C.reversed = reversed_ordering;
    C.mono = std::make_shared<const MonoidTable>(spec, SubsetOrdering::all_singletons(r));
    C.comps = compositions_of(r, n);
    const MonoidTable& mono = *C.mono;

    for (const Composition& nu : C.comps)
        C.ords.push_back(SubsetOrdering::with_nu(r, nu, reversed_ordering));

    for (const Composition& mu : C.comps) {
        std::vector<int> ids, gens;
        for (const Permutation& p : young_subgroup(mu))
            ids.push_back(mono.id_of(PartialMap::from_permutation(p)));
        for (const Permutation& g : young_generators(mu))
            gens.push_back(mono.id_of(PartialMap::from_permutation(g)));
        C.subgroup_ids.push_back(std::move(ids));
        C.gen_ids.push_back(std::move(gens));
    }

    C.cpos.assign(r + 1, {});
    for (int i = 0; i <= r; ++i) {
        C.cpos[i].assign(std::size_t{1} << r, -1);
        auto subsets = index_subsets(i, r);
        for (std::size_t k = 0; k < subsets.size(); ++k)
            C.cpos[i][subsets[k].mask()] = static_cast<int>(k);
    }

    C.orbC.assign(C.ncomps(), {});
    C.orbC_of.assign(C.ncomps(), {});
    C.orbD.assign(C.ncomps(), {});
    C.orbD_of.assign(C.ncomps(), {});
    for (int mu = 0; mu < C.ncomps(); ++mu) {
        C.orbC[mu].assign(r + 1, {});
        C.orbC_of[mu].assign(r + 1, {});
        C.orbD[mu].assign(r + 1, {});
        C.orbD_of[mu].assign(r + 1, {});
        for (int i : mono.realized_indices()) {
            auto subsets = index_subsets(i, r);
            C.orbC_of[mu][i].assign(subsets.size(), -1);
            for (std::size_t k = 0; k < subsets.size(); ++k) {
                if (C.orbC_of[mu][i][k] >= 0) continue;
                OrbitC o = orbit_of_C(C.comps[mu], subsets[k]);
                int oid = static_cast<int>(C.orbC[mu][i].size());
                for (const auto& member : o.members)
                    C.orbC_of[mu][i][C.cpos[i][member.mask()]] = oid;
                C.orbC[mu][i].push_back(std::move(o));
            }
            const auto& fams = mono.block_families(i);
            C.orbD_of[mu][i].assign(fams.size(), -1);
            for (std::size_t k = 0; k < fams.size(); ++k) {
                if (C.orbD_of[mu][i][k] >= 0) continue;
                OrbitD o = orbit_of_D(C.comps[mu], fams[k], C.ords[mu]);
                int oid = static_cast<int>(C.orbD[mu][i].size());
                for (const auto& member : o.members) {
                    BlockFamily canon = make_block_family(member.blocks, mono.ordering());
                    C.orbD_of[mu][i][mono.family_id(i, canon)] = oid;
                }
                C.orbD[mu][i].push_back(std::move(o));
            }
        }
    }

    C.pair_bids.assign(C.ncomps() * C.ncomps(), {});
    C.elem_coset.assign(C.ncomps() * C.ncomps(), {});
    for (int mu = 0; mu < C.ncomps(); ++mu)
        for (int nu = 0; nu < C.ncomps(); ++nu) {
            int pair = C.pair_idx(mu, nu);
            C.elem_coset[pair].assign(mono.size(), -1);
            for (int e = 0; e < mono.size(); ++e) {
                if (C.elem_coset[pair][e] >= 0) continue;
                DoubleCoset dc;
                dc.mu_idx = mu;
                dc.nu_idx = nu;
                int bid = static_cast<int>(C.cosets.size());
                dc.local = static_cast<int>(C.pair_bids[pair].size());
                std::vector<int> stack{e};
                C.elem_coset[pair][e] = bid;
                dc.members.push_back(e);
                while (!stack.empty()) {
                    int cur = stack.back();
                    stack.pop_back();
                    auto visit = [&](int nxt) {
                        if (C.elem_coset[pair][nxt] < 0) {
                            C.elem_coset[pair][nxt] = bid;
                            dc.members.push_back(nxt);
                            stack.push_back(nxt);
                        }
                    };
                    for (int g : C.gen_ids[mu]) visit(mono.mul(g, cur));
                    for (int g : C.gen_ids[nu]) visit(mono.mul(cur, g));
                }
                std::sort(dc.members.begin(), dc.members.end());
                dc.rep = dc.members[0];
                const Factorization& f = mono.factorization(dc.rep);
                int i = f.index();
                dc.index = i;
                dc.orbitC = C.orbC_of[mu][i][C.cpos[i][f.C.mask()]];
                dc.orbitD = C.orbD_of[nu][i][mono.family_id(i, f.D)];
                std::set<int> lcoset, rcoset;
                for (int s : C.subgroup_ids[mu]) lcoset.insert(mono.mul(s, dc.rep));
                for (int s : C.subgroup_ids[nu]) rcoset.insert(mono.mul(dc.rep, s));
                dc.nL = static_cast<long long>(lcoset.size());
                dc.nR = static_cast<long long>(rcoset.size());
                C.pair_bids[pair].push_back(bid);
                C.cosets.push_back(std::move(dc));
            }
        }

    build_cells();
}

void SchurAlgebra::build_cells() {
    Core& C = *core_;
    const MonoidTable& mono = *C.mono;
    int r = C.r;
    CellStructure& cs = cells_;
    cs.oracle = std::make_shared<SchurOracle>(core_, side_);

    std::vector<std::pair<int, int>> layer_refs;  // (index, shape position)
    std::map<std::pair<int, int>, int> layer_lookup;
    for (int i : mono.realized_indices()) {
        auto shapes = partitions_of(i);
        for (std::size_t si = 0; si < shapes.size(); ++si) {
            layer_lookup[{i, static_cast<int>(si)}] = static_cast<int>(cs.lambdas.size());
            cs.lambdas.push_back(shapes[si]);
            layer_refs.emplace_back(i, static_cast<int>(si));
        }
    }
    int nlayers = static_cast<int>(cs.lambdas.size());

    Lbase_.assign(nlayers, {});
    Rbase_.assign(nlayers, {});
    Lent_.assign(nlayers, {});
    Rent_.assign(nlayers, {});
    cs.left_labels.assign(nlayers, {});
    cs.right_labels.assign(nlayers, {});
    for (int li = 0; li < nlayers; ++li) {
        int i = layer_refs[li].first;
        const Partition& shape = cs.lambdas[li];
        Lbase_[li].assign(C.ncomps(), {});
        Rbase_[li].assign(C.ncomps(), {});
        for (int mu = 0; mu < C.ncomps(); ++mu) {
            Lbase_[li][mu].assign(C.orbC[mu][i].size(), -1);
            for (std::size_t o = 0; o < C.orbC[mu][i].size(); ++o) {
                auto tabs = semistandard_tableaux(shape, C.orbC[mu][i][o].comp.stripped());
                Lbase_[li][mu][o] = static_cast<int>(cs.left_labels[li].size());
                for (std::size_t S = 0; S < tabs.size(); ++S) {
                    cs.left_labels[li].push_back("mu=" + C.comps[mu].to_string() + " O" +
                                                 std::to_string(o) + " S" +
                                                 std::to_string(S));
                    Lent_[li].push_back({mu, static_cast<int>(o), static_cast<int>(S)});
                }
            }
            Rbase_[li][mu].assign(C.orbD[mu][i].size(), -1);
            for (std::size_t o = 0; o < C.orbD[mu][i].size(); ++o) {
                auto tabs = semistandard_tableaux(shape, C.orbD[mu][i][o].comp.stripped());
                Rbase_[li][mu][o] = static_cast<int>(cs.right_labels[li].size());
                for (std::size_t T = 0; T < tabs.size(); ++T) {
                    cs.right_labels[li].push_back("nu=" + C.comps[mu].to_string() + " O" +
                                                  std::to_string(o) + " T" +
                                                  std::to_string(T));
                    Rent_[li].push_back({mu, static_cast<int>(o), static_cast<int>(T)});
                }
            }
        }
    }

    cs.natural_labels.resize(C.cosets.size());
    for (std::size_t bid = 0; bid < C.cosets.size(); ++bid) {
        const DoubleCoset& dc = C.cosets[bid];
        cs.natural_labels[bid] = "X(mu=" + C.comps[dc.mu_idx].to_string() +
                                 ",nu=" + C.comps[dc.nu_idx].to_string() +
                                 ",rep=" + mono.element(dc.rep).to_string() + ")";
    }

    std::vector<int> offs(nlayers + 1, 0);
    for (int li = 0; li < nlayers; ++li)
        offs[li + 1] = offs[li] + static_cast<int>(cs.left_labels[li].size() *
                                                   cs.right_labels[li].size());

    for (int mu = 0; mu < C.ncomps(); ++mu)
        for (int nu = 0; nu < C.ncomps(); ++nu) {
            int pair = C.pair_idx(mu, nu);
            std::map<std::tuple<int, int, int>, std::vector<int>> summands;
            for (int bid : C.pair_bids[pair]) {
                const DoubleCoset& dc = C.cosets[bid];
                summands[{dc.index, dc.orbitC, dc.orbitD}].push_back(bid);
            }
            for (auto& [key, bids] : summands) {
                auto [i, oC, oD] = key;
                const OrbitC& ocb = C.orbC[mu][i][oC];
                const OrbitD& odb = C.orbD[nu][i][oD];
                const SummandType& ty =
                    summand_type(i, ocb.comp.stripped(), odb.comp.stripped());
                if (ty.scosets.size() != bids.size())
                    throw std::logic_error(
                        "schur cells: summand rank differs from S_i coset count");

                CellBlock B;
                const MurphyBasis& mb = murphy_basis(i);
                std::set<int> seen;
                for (const auto& sc : ty.scosets) {
                    PartialMap alpha = assemble_map(ocb.members[0], mb.group()[sc[0]],
                                                    odb.members[0], r);
                    int eid = mono.id_of(alpha);
                    if (eid < 0)
                        throw std::logic_error("schur cells: transfer leaves the monoid");
                    int bid = C.elem_coset[pair][eid];
                    const DoubleCoset& dc = C.cosets[bid];
                    if (dc.index != i || dc.orbitC != oC || dc.orbitD != oD)
                        throw std::logic_error("schur cells: transfer misses the summand");
                    if (!seen.insert(bid).second)
                        throw std::logic_error("schur cells: transfer not injective");
                    B.natural_ids.push_back(bid);
                }
                for (const auto& row : ty.rows) {
                    int li = layer_lookup.at({i, row.shape_idx});
                    int l = Lbase_[li][mu][oC] + row.S_idx;
                    int t = Rbase_[li][nu][oD] + row.T_idx;
                    int Rsz = static_cast<int>(cs.right_labels[li].size());
                    B.cell_ids.push_back(offs[li] + l * Rsz + t);
                }
                B.fwd = ty.fwd;
                B.conv = ty.conv;
                cs.blocks.push_back(std::move(B));
            }
        }

    cs.finalize();
}

const MonoidSpec& SchurAlgebra::spec() const { return core_->spec; }
int SchurAlgebra::r() const { return core_->r; }
int SchurAlgebra::n() const { return core_->n; }
const MonoidTable& SchurAlgebra::monoid() const { return *core_->mono; }
const std::vector<Composition>& SchurAlgebra::compositions() const { return core_->comps; }

const SubsetOrdering& SchurAlgebra::ordering_for(int nu_idx) const {
    return core_->ords[nu_idx];
}

int SchurAlgebra::dim() const { return static_cast<int>(core_->cosets.size()); }
const DoubleCoset& SchurAlgebra::coset(int bid) const { return core_->cosets[bid]; }

int SchurAlgebra::coset_id(int mu_idx, int nu_idx, int member) const {
    return core_->elem_coset[core_->pair_idx(mu_idx, nu_idx)][member];
}

const std::vector<int>& SchurAlgebra::pair_cosets(int mu_idx, int nu_idx) const {
    return core_->pair_bids[core_->pair_idx(mu_idx, nu_idx)];
}

const std::vector<OrbitC>& SchurAlgebra::orbitsC(int mu_idx, int i) const {
    return core_->orbC[mu_idx][i];
}

const std::vector<OrbitD>& SchurAlgebra::orbitsD(int nu_idx, int i) const {
    return core_->orbD[nu_idx][i];
}

int SchurAlgebra::orbitC_index(int mu_idx, const IndexSubset& C) const {
    int i = C.size();
    return core_->orbC_of[mu_idx][i][core_->cpos[i][C.mask()]];
}

int SchurAlgebra::orbitD_index(int nu_idx, int i, const BlockFamily& D) const {
    BlockFamily canon = make_block_family(D.blocks, core_->mono->ordering());
    return core_->orbD_of[nu_idx][i][core_->mono->family_id(i, canon)];
}

std::vector<std::pair<int, long long>> SchurAlgebra::ordinary_product(int b1,
                                                                      int b2) const {
    const DoubleCoset& c1 = core_->cosets[b1];
    const DoubleCoset& c2 = core_->cosets[b2];
    if (c1.nu_idx != c2.mu_idx) return {};
    return core_->expand(b1, b2);
}

SparseVec SchurAlgebra::star_product(const SparseVec& x, const SparseVec& y) const {
    return cells_.oracle->mul(x, y);
}

const SparseVec& SchurAlgebra::identity_element() const {
    std::call_once(identity_once_, [&] {
        SparseVec e;
        for (int mu = 0; mu < core_->ncomps(); ++mu)
            e.add_term(coset_id(mu, mu, core_->mono->identity_id()), 1);
        e.normalize();
        bool ok = true;
        for (int bid = 0; bid < dim() && ok; ++bid) {
            SparseVec b = SparseVec::unit(bid);
            if (!(star_product(e, b) == b) || !(star_product(b, e) == b)) ok = false;
        }
        if (!ok) {
            // recover the identity as the exact solution of e*b = b, b*e = b
            if (dim() > 300)
                throw std::logic_error("identity_element: candidate failed verification");
            int d = dim();
            MatZ sys(2 * static_cast<std::size_t>(d) * d, std::vector<BigInt>(d, 0));
            std::vector<BigInt> rhs(2 * static_cast<std::size_t>(d) * d, 0);
            for (int b = 0; b < d; ++b) {
                for (int a = 0; a < d; ++a) {
                    SparseVec left = star_product(SparseVec::unit(a), SparseVec::unit(b));
                    for (const auto& [id, c] : left.terms)
                        sys[static_cast<std::size_t>(b) * d + id][a] =
                            static_cast<long>(c);
                    SparseVec right = star_product(SparseVec::unit(b), SparseVec::unit(a));
                    for (const auto& [id, c] : right.terms)
                        sys[static_cast<std::size_t>(d) * d +
                            static_cast<std::size_t>(b) * d + id][a] =
                            static_cast<long>(c);
                }
                rhs[static_cast<std::size_t>(b) * d + b] = 1;
                rhs[static_cast<std::size_t>(d) * d + static_cast<std::size_t>(b) * d + b] =
                    1;
            }
            auto sol = solve_integer(sys, rhs);
            if (!sol) throw std::logic_error("identity_element: no identity exists");
            e = SparseVec{};
            for (int a = 0; a < d; ++a)
                if ((*sol)[a] != 0) e.add_term(a, (*sol)[a].get_si());
            e.normalize();
        }
        identity_ = std::move(e);
    });
    return identity_;
}

int SchurAlgebra::left_position(int li, int mu_idx, int orbit, int S_idx) const {
    return Lbase_[li][mu_idx][orbit] + S_idx;
}

int SchurAlgebra::right_position(int li, int nu_idx, int orbit, int T_idx) const {
    return Rbase_[li][nu_idx][orbit] + T_idx;
}

SchurAlgebra::IndexEntry SchurAlgebra::left_entry(int li, int pos) const {
    return Lent_[li].at(pos);
}

SchurAlgebra::IndexEntry SchurAlgebra::right_entry(int li, int pos) const {
    return Rent_[li].at(pos);
}

SparseVec SchurAlgebra::phi_transfer(int i, int mu_idx, int orbitC, int nu_idx, int orbitD,
                                     const SparseVec& x_over_Si) const {
    const Core& C = *core_;
    const MonoidTable& mono = *C.mono;
    const MurphyBasis& mb = murphy_basis(i);
    const OrbitC& oc = C.orbC[mu_idx][i].at(orbitC);
    const OrbitD& od = C.orbD[nu_idx][i].at(orbitD);

    std::vector<long long> acc(mono.size(), 0);
    for (const auto& [wid, c] : x_over_Si.terms)
        for (const auto& Cm : oc.members)
            for (const auto& Dm : od.members) {
                int eid = mono.id_of(assemble_map(Cm, mb.group()[wid], Dm, C.r));
                if (eid < 0)
                    throw std::logic_error("phi_transfer: image escapes the monoid");
                acc[eid] = checked_add(acc[eid], c);
            }
    int pair = C.pair_idx(mu_idx, nu_idx);
    SparseVec out;
    std::set<int> touched;
    for (int e = 0; e < mono.size(); ++e)
        if (acc[e] != 0) touched.insert(C.elem_coset[pair][e]);
    for (int bid : touched) {
        const DoubleCoset& dc = C.cosets[bid];
        long long v = acc[dc.members[0]];
        for (int m : dc.members)
            if (acc[m] != v)
                throw std::logic_error("phi_transfer: result not constant on cosets");
        out.add_term(bid, v);
    }
    out.normalize();
    return out;
}

CellStructure& schur_cell_structure(SchurAlgebra& alg) { return alg.mutable_cells(); }

}  // namespace cellalg
