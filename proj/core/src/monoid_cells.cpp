#include "cellalg/monoid_cells.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cellalg {

MurphyBasis::MurphyBasis(int i) : i_(i) {
    if (i < 0 || i > 6) throw std::invalid_argument("MurphyBasis: letters out of [0,6]");
    group_ = symmetric_group(i);
    std::sort(group_.begin(), group_.end());
    shapes_ = partitions_of(i);
    shape_row_offset_.assign(shapes_.size() + 1, 0);

    auto pid = [&](const Permutation& p) {
        auto it = std::lower_bound(group_.begin(), group_.end(), p);
        return static_cast<int>(it - group_.begin());
    };

    fwd_.assign(0, {});
    for (std::size_t si = 0; si < shapes_.size(); ++si) {
        const Partition& shape = shapes_[si];
        tabs_.push_back(standard_tableaux(shape));
        const auto& tabs = tabs_.back();
        shape_row_offset_[si + 1] =
            shape_row_offset_[si] + static_cast<int>(tabs.size() * tabs.size());
        std::vector<Permutation> sym = young_subgroup(Composition(shape.parts()));
        for (std::size_t s = 0; s < tabs.size(); ++s) {
            // multiplication here is function composition, so the standard
            // d(s)^-1 . x . d(t) written in apply-first order becomes
            // d(s) o w o d(t)^-1
            Permutation ds = tabs[s].word_permutation();
            for (std::size_t t = 0; t < tabs.size(); ++t) {
                Permutation dt_inv = tabs[t].word_permutation().inverse();
                MurphyElement el;
                el.shape = shape;
                el.s_index = static_cast<int>(s);
                el.t_index = static_cast<int>(t);
                std::vector<long long> row(group_.size(), 0);
                for (const Permutation& w : sym) {
                    int id = pid(ds * w * dt_inv);
                    el.expansion.add_term(id, 1);
                    row[id] += 1;
                }
                el.expansion.normalize();
                if (el.expansion.terms.size() != sym.size())
                    throw std::logic_error("MurphyBasis: symmetrizer terms collide");
                elements_.push_back(std::move(el));
                fwd_.push_back(std::move(row));
            }
        }
    }
    if (elements_.size() != group_.size())
        throw std::logic_error("MurphyBasis: row count is not |S_i|");
    Mat64 ft(group_.size(), std::vector<long long>(group_.size()));
    for (std::size_t c = 0; c < group_.size(); ++c)
        for (std::size_t n = 0; n < group_.size(); ++n) ft[n][c] = fwd_[c][n];
    conv_ = inverse_unimodular(ft);
}

int MurphyBasis::perm_id(const Permutation& p) const {
    auto it = std::lower_bound(group_.begin(), group_.end(), p);
    if (it == group_.end() || !(*it == p))
        throw std::invalid_argument("MurphyBasis::perm_id: unknown permutation");
    return static_cast<int>(it - group_.begin());
}

int MurphyBasis::row_of(int shape_idx, int s, int t) const {
    int f = static_cast<int>(tabs_[shape_idx].size());
    return shape_row_offset_[shape_idx] + s * f + t;
}

const MurphyBasis& murphy_basis(int i) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<MurphyBasis>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(i);
    if (it == cache.end())
        it = cache.emplace(i, std::make_unique<MurphyBasis>(i)).first;
    return *it->second;
}

std::vector<MurphyElement> murphy_elements(int i) {
    const MurphyBasis& mb = murphy_basis(i);
    std::vector<MurphyElement> out;
    out.reserve(mb.rows());
    for (int row = 0; row < mb.rows(); ++row) out.push_back(mb.element(row));
    return out;
}

SparseVec h_cd(const MonoidTable& table, const IndexSubset& C, const BlockFamily& D,
               const SparseVec& x) {
    if (C.size() != D.size()) throw std::invalid_argument("h_cd: |C| != |D|");
    const MurphyBasis& mb = murphy_basis(C.size());
    SparseVec out;
    for (const auto& [wid, c] : x.terms) {
        PartialMap a = assemble_map(C, mb.group()[wid], D, table.spec().r);
        int id = table.id_of(a);
        if (id < 0) throw std::logic_error("h_cd: image escapes the monoid");
        out.add_term(id, c);
    }
    out.normalize();
    return out;
}

namespace {

MonoidCells monoidal_cells_build(std::shared_ptr<const MonoidTable> table) {
    const MonoidTable& tab = *table;
    int r = tab.spec().r;

    MonoidCells mc;
    mc.table = table;
    CellStructure& cs = mc.cs;
    cs.oracle = std::make_shared<MonoidAlgebraOracle>(table);

    for (int i : tab.realized_indices()) {
        const auto& shapes = partitions_of(i);
        const auto Cs = index_subsets(i, r);
        const auto& Ds = tab.block_families(i);
        const MurphyBasis& mb = murphy_basis(i);
        for (std::size_t si = 0; si < shapes.size(); ++si) {
            int f = static_cast<int>(mb.tableaux(static_cast<int>(si)).size());
            cs.lambdas.push_back(shapes[si]);
            std::vector<std::string> ll, rl;
            for (const auto& C : Cs)
                for (int s = 0; s < f; ++s) {
                    std::string name = "C={";
                    for (std::size_t k = 0; k < C.elems.size(); ++k)
                        name += (k ? "," : "") + std::to_string(C.elems[k]);
                    ll.push_back(name + "} s" + std::to_string(s));
                }
            for (const auto& D : Ds)
                for (int t = 0; t < f; ++t) {
                    std::string name = "D={";
                    for (std::size_t k = 0; k < D.blocks.size(); ++k) {
                        name += k ? ",{" : "{";
                        auto es = mask_elements(D.blocks[k]);
                        for (std::size_t e = 0; e < es.size(); ++e)
                            name += (e ? "," : "") + std::to_string(es[e]);
                        name += "}";
                    }
                    rl.push_back(name + "} t" + std::to_string(t));
                }
            cs.left_labels.push_back(std::move(ll));
            cs.right_labels.push_back(std::move(rl));
        }
    }
    cs.natural_labels.resize(tab.size());
    for (int id = 0; id < tab.size(); ++id)
        cs.natural_labels[id] = tab.element(id).to_string();

    // blocks reference cell ids before finalize runs, so replicate the
    // layer offset computation here
    std::vector<int> offs(cs.lambdas.size() + 1, 0);
    for (std::size_t li = 0; li < cs.lambdas.size(); ++li)
        offs[li + 1] = offs[li] + static_cast<int>(cs.left_labels[li].size() *
                                                   cs.right_labels[li].size());

    int layer_base = 0;
    for (int i : tab.realized_indices()) {
        const auto Cs = index_subsets(i, r);
        const auto& Ds = tab.block_families(i);
        const MurphyBasis& mb = murphy_basis(i);
        int nshapes = static_cast<int>(partitions_of(i).size());
        for (std::size_t ci = 0; ci < Cs.size(); ++ci) {
            for (std::size_t di = 0; di < Ds.size(); ++di) {
                CellBlock B;
                B.fwd = mb.fwd();
                B.conv = mb.conv();
                for (const Permutation& w : mb.group()) {
                    int id = tab.id_of(assemble_map(Cs[ci], w, Ds[di], r));
                    if (id < 0)
                        throw std::logic_error("monoid_cell_structure: block element not in M");
                    B.natural_ids.push_back(id);
                }
                for (int sh = 0; sh < nshapes; ++sh) {
                    int li = layer_base + sh;
                    int f = static_cast<int>(mb.tableaux(sh).size());
                    int Rsz = static_cast<int>(cs.right_labels[li].size());
                    for (int s = 0; s < f; ++s)
                        for (int t = 0; t < f; ++t) {
                            int l = static_cast<int>(ci) * f + s;
                            int tt = static_cast<int>(di) * f + t;
                            B.cell_ids.push_back(offs[li] + l * Rsz + tt);
                        }
                }
                cs.blocks.push_back(std::move(B));
            }
        }
        layer_base += nshapes;
    }
    cs.finalize();
    return mc;
}

}  // namespace

MonoidCells monoid_cell_structure(const MonoidSpec& spec, const RingSpec& ring,
                                  const SubsetOrdering& ord) {
    (void)ring;  // coefficients live over Z; fields enter at Gram reduction time
    auto table = std::make_shared<const MonoidTable>(spec, ord);
    return monoidal_cells_build(std::move(table));
}

int MonoidCells::left_index(int li, int c_idx, int s_idx) const {
    int i = cs.lambdas[li].index();
    const MurphyBasis& mb = murphy_basis(i);
    int shape_idx = 0;
    const auto shapes = partitions_of(i);
    for (std::size_t k = 0; k < shapes.size(); ++k)
        if (shapes[k] == cs.lambdas[li]) shape_idx = static_cast<int>(k);
    int f = static_cast<int>(mb.tableaux(shape_idx).size());
    return c_idx * f + s_idx;
}

int MonoidCells::right_index(int li, int d_idx, int t_idx) const {
    int i = cs.lambdas[li].index();
    const MurphyBasis& mb = murphy_basis(i);
    int shape_idx = 0;
    const auto shapes = partitions_of(i);
    for (std::size_t k = 0; k < shapes.size(); ++k)
        if (shapes[k] == cs.lambdas[li]) shape_idx = static_cast<int>(k);
    int f = static_cast<int>(mb.tableaux(shape_idx).size());
    return d_idx * f + t_idx;
}

RadicalEquivalence radical_equivalence_check(const MonoidCells& mc,
                                             const MonoidCells& sym,
                                             const RingSpec& field,
                                             const Partition& lambda) {
    if (!field.is_field())
        throw std::invalid_argument("radical_equivalence_check: need a field");
    if (lambda.index() < 1)
        throw std::invalid_argument("radical_equivalence_check: index must be >= 1");
    GramReport gm = gram_matrix(mc.cs, mc.cs.layer_of(lambda));
    GramReport gs = gram_matrix(sym.cs, sym.cs.layer_of(lambda));
    RadicalEquivalence out;
    out.monoid_zero = !gm.nonzero_over(field);
    out.symmetric_zero = !gs.nonzero_over(field);
    out.equivalent = out.monoid_zero == out.symmetric_zero;
    return out;
}

RadicalEquivalence radical_equivalence_check(const MonoidSpec& spec,
                                             const RingSpec& field,
                                             const Partition& lambda) {
    MonoidCells mc = monoid_cell_structure(spec, RingSpec::integers(),
                                           SubsetOrdering::all_singletons(spec.r));
    MonoidSpec symspec{MonoidKind::symmetric, lambda.index()};
    MonoidCells sym = monoid_cell_structure(symspec, RingSpec::integers(),
                                            SubsetOrdering::all_singletons(lambda.index()));
    return radical_equivalence_check(mc, sym, field, lambda);
}

}  // namespace cellalg
