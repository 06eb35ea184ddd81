#include "cellalg/monoid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cellalg {

PartialMap PartialMap::identity(int r) {
    PartialMap a;
    a.r = r;
    a.img.resize(r);
    for (int x = 1; x <= r; ++x) a.img[x - 1] = x;
    return a;
}

PartialMap PartialMap::zero(int r) {
    PartialMap a;
    a.r = r;
    a.img.assign(r, 0);
    return a;
}

PartialMap PartialMap::from_permutation(const Permutation& p) {
    PartialMap a;
    a.r = p.degree();
    a.img.resize(a.r);
    for (int x = 0; x < a.r; ++x) a.img[x] = p(x) + 1;
    return a;
}

std::string PartialMap::to_string() const {
    std::string s = "[";
    for (int x = 0; x < r; ++x) {
        if (x) s += ",";
        s += std::to_string(img[x]);
    }
    return s + "]";
}

PartialMap compose(const PartialMap& a, const PartialMap& b) {
    if (a.r != b.r) throw std::invalid_argument("compose: rank mismatch");
    PartialMap c;
    c.r = a.r;
    c.img.resize(a.r);
    for (int x = 1; x <= a.r; ++x) {
        int y = b.img[x - 1];
        c.img[x - 1] = (y == 0) ? 0 : a.img[y - 1];
    }
    return c;
}

int index_of(const PartialMap& a) {
    SubsetMask seen = 0;
    for (int v : a.img)
        if (v > 0) seen |= (SubsetMask{1} << (v - 1));
    return std::popcount(seen);
}

std::string MonoidSpec::to_string() const {
    switch (kind) {
        case MonoidKind::full: return "T_" + std::to_string(r);
        case MonoidKind::rook: return "R_" + std::to_string(r);
        case MonoidKind::partial: return "PT_" + std::to_string(r);
        case MonoidKind::symmetric: return "S_" + std::to_string(r);
    }
    return "?";
}

bool monoid_contains(const MonoidSpec& spec, const PartialMap& a) {
    if (a.r != spec.r) return false;
    bool total = true;
    SubsetMask hit = 0;
    bool injective = true;
    for (int v : a.img) {
        if (v == 0) {
            total = false;
            continue;
        }
        SubsetMask bit = SubsetMask{1} << (v - 1);
        if (hit & bit) injective = false;
        hit |= bit;
    }
    switch (spec.kind) {
        case MonoidKind::full: return total;
        case MonoidKind::rook: return injective;
        case MonoidKind::partial: return true;
        case MonoidKind::symmetric: return total && injective;
    }
    return false;
}

std::vector<PartialMap> enumerate_monoid(const MonoidSpec& spec) {
    int r = spec.r;
    if (r < 1 || r > 6)
        throw std::invalid_argument("enumerate_monoid: rank out of supported bound [1,6]");
    std::vector<PartialMap> out;
    PartialMap cur;
    cur.r = r;
    cur.img.assign(r, 0);
    // lexicographic by image tuple
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == r) {
            if (monoid_contains(spec, cur)) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= r; ++v) {
            cur.img[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> mask_elements(SubsetMask d) {
    std::vector<int> out;
    for (int x = 1; d; ++x, d >>= 1)
        if (d & 1) out.push_back(x);
    return out;
}

SubsetMask elements_mask(const std::vector<int>& elems) {
    SubsetMask d = 0;
    for (int x : elems) d |= (SubsetMask{1} << (x - 1));
    return d;
}

SubsetOrdering SubsetOrdering::all_singletons(int r) {
    return with_nu(r, Composition(std::vector<int>(r, 1)), false);
}

SubsetOrdering SubsetOrdering::with_nu(int r, Composition nu, bool reversed) {
    if (nu.weight() != r)
        throw std::invalid_argument("SubsetOrdering: nu must have weight r");
    SubsetOrdering ord;
    ord.r_ = r;
    ord.nu_ = std::move(nu);
    ord.reversed_ = reversed;
    ord.default_ = !reversed;
    for (int p : ord.nu_.parts())
        if (p != 1) ord.default_ = false;

    SubsetMask count = SubsetMask{1} << r;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keys(count);
    for (SubsetMask d = 0; d < count; ++d) keys[d] = ord.key(d);

    ord.sorted_.resize(count);
    for (SubsetMask d = 0; d < count; ++d) ord.sorted_[d] = d;
    std::sort(ord.sorted_.begin(), ord.sorted_.end(), [&](SubsetMask a, SubsetMask b) {
        if (keys[a].first != keys[b].first)
            return reversed ? keys[a].first > keys[b].first : keys[a].first < keys[b].first;
        return reversed ? keys[a].second > keys[b].second : keys[a].second < keys[b].second;
    });
    ord.rank_.resize(count);
    ord.orbit_.assign(count, 0);
    int orbit = 0;
    for (SubsetMask pos = 0; pos < count; ++pos) {
        SubsetMask d = ord.sorted_[pos];
        ord.rank_[d] = static_cast<int>(pos);
        if (pos == 0 || keys[d].first != keys[ord.sorted_[pos - 1]].first) ++orbit;
        ord.orbit_[d] = orbit;
    }
    ord.norbits_ = orbit;
    return ord;
}

std::vector<int> SubsetOrdering::s_string(SubsetMask d) const {
    return mask_elements(d);
}

std::vector<int> SubsetOrdering::orbit_string(SubsetMask d) const {
    std::vector<int> s(r_, 0);
    int k = 0;
    for (int x : mask_elements(d)) s[k++] = nu_.block_of(x);
    return s;
}

std::pair<std::vector<int>, std::vector<int>> SubsetOrdering::key(SubsetMask d) const {
    return {orbit_string(d), s_string(d)};
}

IndexSubset IndexSubset::from_mask(SubsetMask d) {
    return IndexSubset{mask_elements(d)};
}

std::vector<IndexSubset> index_subsets(int i, int r) {
    std::vector<IndexSubset> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == i) {
            out.push_back(IndexSubset{cur});
            return;
        }
        for (int x = next; x <= r - (i - static_cast<int>(cur.size())) + 1; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    if (i >= 0 && i <= r) rec(rec, 1);
    return out;
}

SubsetMask BlockFamily::support() const {
    SubsetMask s = 0;
    for (SubsetMask b : blocks) s |= b;
    return s;
}

BlockFamily make_block_family(std::vector<SubsetMask> blocks, const SubsetOrdering& ord) {
    SubsetMask seen = 0;
    for (SubsetMask b : blocks) {
        if (b == 0) throw std::invalid_argument("BlockFamily: empty block");
        if (seen & b) throw std::invalid_argument("BlockFamily: blocks not disjoint");
        seen |= b;
    }
    std::sort(blocks.begin(), blocks.end(),
              [&](SubsetMask a, SubsetMask b) { return ord.less(a, b); });
    return BlockFamily{std::move(blocks)};
}

IndexedMap phi_map(const IndexSubset& C, int r) {
    IndexedMap f;
    f.dom = C.size();
    f.cod = r;
    f.img = C.elems;
    return f;
}

IndexedMap psi_map(const BlockFamily& D, int r) {
    IndexedMap f;
    f.dom = r;
    f.cod = D.size();
    f.img.assign(r, 0);
    for (int j = 0; j < D.size(); ++j)
        for (int x : mask_elements(D.blocks[j])) f.img[x - 1] = j + 1;
    return f;
}

IndexedMap compose_maps(const IndexedMap& a, const IndexedMap& b) {
    if (b.cod != a.dom) throw std::invalid_argument("compose_maps: domain mismatch");
    IndexedMap c;
    c.dom = b.dom;
    c.cod = a.cod;
    c.img.resize(b.dom);
    for (int x = 1; x <= b.dom; ++x) c.img[x - 1] = a(b(x));
    return c;
}

Factorization factorize(const PartialMap& a, const SubsetOrdering& ord) {
    if (a.r != ord.r())
        throw std::invalid_argument("factorize: ordering rank mismatch");
    SubsetMask image = 0;
    for (int v : a.img)
        if (v > 0) image |= (SubsetMask{1} << (v - 1));
    IndexSubset C = IndexSubset::from_mask(image);
    int i = C.size();

    std::vector<SubsetMask> fibers;
    for (int c : C.elems) {
        SubsetMask f = 0;
        for (int x = 1; x <= a.r; ++x)
            if (a.img[x - 1] == c) f |= (SubsetMask{1} << (x - 1));
        fibers.push_back(f);
    }
    BlockFamily D = make_block_family(fibers, ord);

    std::vector<int> pos_in_C(a.r + 1, 0);
    for (int j = 0; j < i; ++j) pos_in_C[C.elems[j]] = j;
    std::vector<int> sigma_img(i);
    for (int j = 0; j < i; ++j) {
        int x = mask_elements(D.blocks[j]).front();
        sigma_img[j] = pos_in_C[a.img[x - 1]];
    }
    return Factorization{Permutation(sigma_img), std::move(C), std::move(D)};
}

PartialMap assemble_map(const IndexSubset& C, const Permutation& sigma,
                        const BlockFamily& D, int r) {
    if (C.size() != D.size() || C.size() != sigma.degree())
        throw std::invalid_argument("assemble_map: size mismatch");
    PartialMap a = PartialMap::zero(r);
    for (int j = 0; j < D.size(); ++j) {
        int c = C.elems[sigma(j)];
        for (int x : mask_elements(D.blocks[j])) a.img[x - 1] = c;
    }
    return a;
}

PartialMap assemble(const Factorization& f, int r) {
    return assemble_map(f.C, f.sigma, f.D, r);
}

std::vector<BlockFamily> reachable_block_families(const MonoidSpec& spec, int i,
                                                  const SubsetOrdering& ord) {
    std::vector<BlockFamily> out;
    bool found_index = false;
    for (const PartialMap& a : enumerate_monoid(spec)) {
        Factorization f = factorize(a, ord);
        if (f.index() != i) continue;
        found_index = true;
        if (std::find(out.begin(), out.end(), f.D) == out.end()) out.push_back(f.D);
    }
    if (!found_index)
        throw std::invalid_argument("reachable_block_families: index not realized in M");
    std::sort(out.begin(), out.end(), [&](const BlockFamily& a, const BlockFamily& b) {
        std::vector<int> ka, kb;
        for (SubsetMask m : a.blocks) ka.push_back(ord.rank(m));
        for (SubsetMask m : b.blocks) kb.push_back(ord.rank(m));
        return ka < kb;
    });
    return out;
}

MonoidTable::MonoidTable(MonoidSpec spec, SubsetOrdering ord)
    : spec_(spec), ord_(std::move(ord)) {
    if (spec_.r != ord_.r())
        throw std::invalid_argument("MonoidTable: ordering rank mismatch");
    elems_ = enumerate_monoid(spec_);
    if (elems_.size() > 4000)
        throw std::invalid_argument("MonoidTable: monoid too large for dense tables");

    long long codes = 1;
    for (int x = 0; x < spec_.r; ++x) codes *= (spec_.r + 1);
    code_to_id_.assign(codes, -1);
    auto code_of = [&](const PartialMap& a) {
        long long c = 0;
        for (int x = 0; x < spec_.r; ++x) c = c * (spec_.r + 1) + a.img[x];
        return c;
    };
    for (int id = 0; id < size(); ++id) code_to_id_[code_of(elems_[id])] = id;
    id_identity_ = code_to_id_[code_of(PartialMap::identity(spec_.r))];

    table_.resize(static_cast<std::size_t>(size()) * size());
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            int c = code_to_id_[code_of(compose(elems_[a], elems_[b]))];
            if (c < 0) throw std::logic_error("MonoidTable: product escaped the monoid");
            table_[static_cast<std::size_t>(a) * size() + b] = static_cast<std::uint16_t>(c);
        }

    fact_.reserve(size());
    std::vector<char> has(spec_.r + 1, 0);
    for (int id = 0; id < size(); ++id) {
        fact_.push_back(factorize(elems_[id], ord_));
        has[fact_.back().index()] = 1;
    }
    for (int i = 0; i <= spec_.r; ++i)
        if (has[i]) indices_.push_back(i);

    families_.resize(spec_.r + 1);
    family_lookup_.resize(spec_.r + 1);
    for (int i : indices_) {
        families_[i] = reachable_block_families(spec_, i, ord_);
        for (int k = 0; k < static_cast<int>(families_[i].size()); ++k)
            family_lookup_[i].emplace_back(families_[i][k], k);
        std::sort(family_lookup_[i].begin(), family_lookup_[i].end());
    }
}

int MonoidTable::id_of(const PartialMap& a) const {
    long long c = 0;
    for (int x = 0; x < spec_.r; ++x) {
        if (a.img[x] < 0 || a.img[x] > spec_.r) return -1;
        c = c * (spec_.r + 1) + a.img[x];
    }
    return code_to_id_[c];
}

bool MonoidTable::has_index(int i) const {
    return std::find(indices_.begin(), indices_.end(), i) != indices_.end();
}

const std::vector<BlockFamily>& MonoidTable::block_families(int i) const {
    if (i < 0 || i > spec_.r || !has_index(i))
        throw std::invalid_argument("block_families: index not realized");
    return families_[i];
}

int MonoidTable::family_id(int i, const BlockFamily& D) const {
    const auto& lk = family_lookup_[i];
    auto it = std::lower_bound(lk.begin(), lk.end(), std::make_pair(D, -1));
    if (it == lk.end() || !(it->first == D))
        throw std::invalid_argument("family_id: family not in D(M,i,r)");
    return it->second;
}

}  // namespace cellalg
