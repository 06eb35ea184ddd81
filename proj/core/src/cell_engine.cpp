#include "cellalg/cell_engine.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace cellalg {

RingSpec RingSpec::gf(int p) {
    if (p < 2) throw std::invalid_argument("RingSpec::gf: p must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("RingSpec::gf: p must be prime");
    return {Kind::prime_field, p};
}

std::string RingSpec::to_string() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::prime_field: return "GF(" + std::to_string(p) + ")";
    }
    return "?";
}

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient addition overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient multiplication overflow");
    return r;
}

void SparseVec::add_term(int id, Coeff c) {
    if (c != 0) terms.emplace_back(id, c);
}

void SparseVec::normalize() {
    std::sort(terms.begin(), terms.end());
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms.size();) {
        int id = terms[i].first;
        Coeff acc = 0;
        while (i < terms.size() && terms[i].first == id) {
            acc = checked_add(acc, terms[i].second);
            ++i;
        }
        if (acc != 0) terms[w++] = {id, acc};
    }
    terms.resize(w);
}

SparseVec& SparseVec::axpy(Coeff a, const SparseVec& x) {
    if (a == 0 || x.empty()) return *this;
    for (const auto& [id, c] : x.terms) terms.emplace_back(id, checked_mul(a, c));
    normalize();
    return *this;
}

SparseVec ProductOracle::mul(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [ia, ca] : a.terms)
        for (const auto& [ib, cb] : b.terms) {
            Coeff c = checked_mul(ca, cb);
            for (const auto& [id, cp] : mul_basis(ia, ib).terms)
                out.add_term(id, checked_mul(c, cp));
        }
    out.normalize();
    return out;
}

void CellStructure::finalize() {
    int layers = num_layers();
    if (layer_geq.empty()) {
        layer_geq.assign(layers, std::vector<char>(layers, 0));
        for (int a = 0; a < layers; ++a)
            for (int b = 0; b < layers; ++b)
                layer_geq[a][b] = lambda_geq(lambdas[a], lambdas[b]) ? 1 : 0;
    }
    layer_offset_.assign(layers + 1, 0);
    for (int li = 0; li < layers; ++li)
        layer_offset_[li + 1] = layer_offset_[li] + Lsize(li) * Rsize(li);
    dim_ = layer_offset_[layers];
    if (!oracle || oracle->dimension() != dim_)
        throw std::logic_error("CellStructure: oracle dimension mismatch");

    info_.resize(dim_);
    for (int li = 0; li < layers; ++li)
        for (int l = 0; l < Lsize(li); ++l)
            for (int t = 0; t < Rsize(li); ++t)
                info_[cell_id(li, l, t)] = CellIndexInfo{li, l, t};

    natural_block_.assign(dim_, -1);
    natural_pos_.assign(dim_, -1);
    std::vector<char> cell_covered(dim_, 0);
    cell_nat_.assign(dim_, SparseVec{});
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
        CellBlock& B = blocks[bi];
        std::size_t k = B.natural_ids.size();
        if (B.cell_ids.size() != k || B.fwd.size() != k)
            throw std::logic_error("CellStructure: ragged block");
        if (B.conv.empty()) {
            // conv = (fwd^T)^{-1}: cell coords u from natural coords v, u = conv v
            Mat64 ft(k, std::vector<long long>(k));
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t n = 0; n < k; ++n) ft[n][c] = B.fwd[c][n];
            B.conv = inverse_unimodular(ft);
        }
        for (std::size_t n = 0; n < k; ++n) {
            int nid = B.natural_ids[n];
            if (natural_block_[nid] != -1)
                throw std::logic_error("CellStructure: natural id in two blocks");
            natural_block_[nid] = bi;
            natural_pos_[nid] = static_cast<int>(n);
        }
        for (std::size_t c = 0; c < k; ++c) {
            int cid = B.cell_ids[c];
            if (cell_covered[cid])
                throw std::logic_error("CellStructure: cell id in two blocks");
            cell_covered[cid] = 1;
            SparseVec v;
            for (std::size_t n = 0; n < k; ++n)
                v.add_term(B.natural_ids[n], B.fwd[c][n]);
            v.normalize();
            cell_nat_[cid] = std::move(v);
        }
    }
    for (int id = 0; id < dim_; ++id) {
        if (natural_block_[id] < 0)
            throw std::logic_error("CellStructure: natural basis not covered by blocks");
        if (!cell_covered[id])
            throw std::logic_error("CellStructure: cell basis not covered by blocks");
    }
}

int CellStructure::layer_of(const Partition& lam) const {
    for (int li = 0; li < num_layers(); ++li)
        if (lambdas[li] == lam) return li;
    throw std::invalid_argument("CellStructure::layer_of: unknown partition");
}

std::vector<std::pair<int, Coeff>> CellStructure::to_cell_coords(const SparseVec& x) const {
    // group natural coordinates by block, then one conv matvec per block
    std::vector<std::pair<int, Coeff>> out;
    std::map<int, std::vector<std::pair<int, Coeff>>> per_block;
    for (const auto& [id, c] : x.terms)
        per_block[natural_block_[id]].emplace_back(natural_pos_[id], c);
    for (const auto& [bi, entries] : per_block) {
        const CellBlock& B = blocks[bi];
        std::size_t k = B.natural_ids.size();
        for (std::size_t c = 0; c < k; ++c) {
            Coeff acc = 0;
            for (const auto& [pos, v] : entries)
                acc = checked_add(acc, checked_mul(B.conv[c][pos], v));
            if (acc != 0) out.emplace_back(B.cell_ids[c], acc);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SparseVec CellStructure::from_cell_coords(const std::vector<std::pair<int, Coeff>>& u) const {
    SparseVec out;
    for (const auto& [cid, c] : u) out.axpy(c, cell_nat_[cid]);
    return out;
}

Mat64 layer_coefficients(const CellStructure& cs, const SparseVec& x, int li) {
    Mat64 m(cs.Lsize(li), std::vector<long long>(cs.Rsize(li), 0));
    for (const auto& [cid, c] : cs.to_cell_coords(x)) {
        const CellIndexInfo& ii = cs.cell_info(cid);
        if (ii.layer == li) m[ii.left][ii.right] = c;
    }
    return m;
}

namespace {

std::string cell_name(const CellStructure& cs, const CellIndexInfo& ii) {
    return "lambda=" + cs.lambdas[ii.layer].to_string() +
           " l=" + cs.left_labels[ii.layer][ii.left] +
           " t=" + cs.right_labels[ii.layer][ii.right];
}

}  // namespace

AxiomCheck verify_cell_axioms(const CellStructure& cs) {
    const int layers = cs.num_layers();
    std::vector<int> loff(layers + 1, 0), roff(layers + 1, 0);
    for (int li = 0; li < layers; ++li) {
        loff[li + 1] = loff[li] + cs.Lsize(li);
        roff[li + 1] = roff[li] + cs.Rsize(li);
    }

    for (int na = 0; na < cs.dim(); ++na) {
        // left vectors per (layer, l), right vectors per (layer, t)
        std::vector<std::vector<Coeff>> lref(loff[layers]), rref(roff[layers]);
        std::vector<char> lseen(loff[layers], 0), rseen(roff[layers], 0);

        for (const CellBlock& B : cs.blocks) {
            std::size_t k = B.natural_ids.size();
            for (int side = 0; side < 2; ++side) {
                // cell coordinates of a * natural_n (or natural_n * a)
                std::vector<std::vector<std::pair<int, Coeff>>> pc(k);
                bool any = false;
                for (std::size_t n = 0; n < k; ++n) {
                    SparseVec prod = side == 0 ? cs.oracle->mul_basis(na, B.natural_ids[n])
                                               : cs.oracle->mul_basis(B.natural_ids[n], na);
                    pc[n] = cs.to_cell_coords(prod);
                    any = any || !pc[n].empty();
                }
                if (!any) continue;
                for (std::size_t c = 0; c < k; ++c) {
                    const CellIndexInfo& ci = cs.cell_info(B.cell_ids[c]);
                    std::map<int, Coeff> acc;
                    for (std::size_t n = 0; n < k; ++n) {
                        Coeff f = B.fwd[c][n];
                        if (f == 0) continue;
                        for (const auto& [id, v] : pc[n])
                            acc[id] = checked_add(acc[id], checked_mul(f, v));
                    }
                    int li = ci.layer;
                    std::vector<Coeff> vec(side == 0 ? cs.Lsize(li) : cs.Rsize(li), 0);
                    for (const auto& [id, v] : acc) {
                        if (v == 0) continue;
                        const CellIndexInfo& ti = cs.cell_info(id);
                        if (ti.layer == li) {
                            if (side == 0 && ti.right != ci.right)
                                return {false, "a=" + cs.natural_labels[na] + " times " +
                                                   cell_name(cs, ci) +
                                                   ": layer support off column t at " +
                                                   cell_name(cs, ti)};
                            if (side == 1 && ti.left != ci.left)
                                return {false, cell_name(cs, ci) + " times a=" +
                                                   cs.natural_labels[na] +
                                                   ": layer support off row s at " +
                                                   cell_name(cs, ti)};
                            vec[side == 0 ? ti.left : ti.right] = v;
                        } else if (!cs.geq(ti.layer, li)) {
                            return {false, "a=" + cs.natural_labels[na] + (side == 0 ? " times " : " after ") +
                                               cell_name(cs, ci) +
                                               ": support at non-higher layer " +
                                               cs.lambdas[ti.layer].to_string()};
                        }
                    }
                    if (side == 0) {
                        int key = loff[li] + ci.left;
                        if (!lseen[key]) {
                            lseen[key] = 1;
                            lref[key] = std::move(vec);
                        } else if (lref[key] != vec) {
                            return {false, "a=" + cs.natural_labels[na] + " at " +
                                               cell_name(cs, ci) +
                                               ": left coefficients depend on the right index"};
                        }
                    } else {
                        int key = roff[li] + ci.right;
                        if (!rseen[key]) {
                            rseen[key] = 1;
                            rref[key] = std::move(vec);
                        } else if (rref[key] != vec) {
                            return {false, cell_name(cs, ci) + " times a=" +
                                               cs.natural_labels[na] +
                                               ": right coefficients depend on the left index"};
                        }
                    }
                }
            }
        }
    }
    return {true, ""};
}

Coeff r_st(const CellStructure& cs, int li, int l, int t, int aux_l, int aux_t) {
    const SparseVec& b1 = cs.cell_natural(cs.cell_id(li, aux_l, t));
    const SparseVec& b2 = cs.cell_natural(cs.cell_id(li, l, aux_t));
    SparseVec prod = cs.oracle->mul(b1, b2);
    Coeff r = 0;
    for (const auto& [cid, v] : cs.to_cell_coords(prod)) {
        const CellIndexInfo& ii = cs.cell_info(cid);
        if (ii.layer == li) {
            if (ii.left != aux_l || ii.right != aux_t)
                throw std::logic_error("r_st: reduced product is not a multiple of the aux cell element");
            r = v;
        } else if (!cs.geq(ii.layer, li)) {
            throw std::logic_error("r_st: product leaks outside the layer ideal");
        }
    }
    return r;
}

Coeff r_st(const CellStructure& cs, int li, int l, int t) {
    return r_st(cs, li, l, t, l, t);
}

bool GramReport::nonzero_over(const RingSpec& field) const {
    for (const auto& row : entries)
        for (const BigInt& e : row) {
            if (field.kind == RingSpec::Kind::prime_field) {
                if (e % field.p != 0) return true;
            } else if (e != 0) {
                return true;
            }
        }
    return false;
}

int GramReport::rank_over(const RingSpec& field) const {
    if (!field.is_field())
        throw std::invalid_argument("GramReport::rank_over: need a field");
    if (entries.empty()) return 0;
    if (field.kind == RingSpec::Kind::prime_field) return rank_mod_p(entries, field.p);
    return rank_exact(entries);
}

GramReport gram_matrix(const CellStructure& cs, int li) {
    GramReport rep;
    rep.lambda = cs.lambdas[li];
    rep.rows = cs.Rsize(li);
    rep.cols = cs.Lsize(li);
    rep.entries.assign(rep.rows, std::vector<BigInt>(rep.cols, 0));
    for (int t = 0; t < rep.rows; ++t)
        for (int s = 0; s < rep.cols; ++s)
            rep.entries[t][s] = static_cast<long>(r_st(cs, li, s, t));
    return rep;
}

GramSet::GramSet(const CellStructure& cs, int jobs) : cs_(cs) {
    reports_.resize(cs.num_layers());
    if (jobs <= 1) {
        for (int li = 0; li < cs.num_layers(); ++li) reports_[li] = gram_matrix(cs, li);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int n = cs.num_layers();
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (;;) {
                int li = next.fetch_add(1);
                if (li >= n) return;
                reports_[li] = gram_matrix(cs_, li);
            }
        });
    for (auto& th : pool) th.join();
}

std::vector<int> GramSet::lambda_zero(const RingSpec& field) const {
    if (!field.is_field())
        throw std::invalid_argument("lambda_zero: need a field");
    std::vector<int> out;
    for (int li = 0; li < static_cast<int>(reports_.size()); ++li)
        if (reports_[li].nonzero_over(field)) out.push_back(li);
    return out;
}

std::map<int, int> GramSet::irreducible_dims(const RingSpec& field) const {
    std::map<int, int> out;
    for (int li = 0; li < static_cast<int>(reports_.size()); ++li) {
        int rk = reports_[li].rank_over(field);
        if (rk > 0) out[li] = rk;
    }
    return out;
}

bool GramSet::quasi_hereditary_sufficient(const RingSpec& field) const {
    return static_cast<int>(lambda_zero(field).size()) == cs_.num_layers();
}

Mat64 action_matrix(const CellStructure& cs, const SparseVec& a, int li, Side side) {
    int L = cs.Lsize(li), R = cs.Rsize(li);
    if (side == Side::left) {
        Mat64 m(L, std::vector<long long>(L, 0));
        int t0 = 0;
        for (int l = 0; l < L; ++l) {
            SparseVec prod = cs.oracle->mul(a, cs.cell_natural(cs.cell_id(li, l, t0)));
            for (const auto& [cid, v] : cs.to_cell_coords(prod)) {
                const CellIndexInfo& ii = cs.cell_info(cid);
                if (ii.layer == li && ii.right == t0) m[ii.left][l] = v;
            }
        }
        return m;
    }
    Mat64 m(R, std::vector<long long>(R, 0));
    int l0 = 0;
    for (int t = 0; t < R; ++t) {
        SparseVec prod = cs.oracle->mul(cs.cell_natural(cs.cell_id(li, l0, t)), a);
        for (const auto& [cid, v] : cs.to_cell_coords(prod)) {
            const CellIndexInfo& ii = cs.cell_info(cid);
            if (ii.layer == li && ii.left == l0) m[ii.right][t] = v;
        }
    }
    return m;
}

}  // namespace cellalg
