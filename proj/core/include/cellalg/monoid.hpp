#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cellalg/combinatorics.hpp"

namespace cellalg {

// Element of the partial transformation monoid on {1..r}: img[x-1] is the
// image of x, with 0 for an undefined point.  0 is always fixed implicitly.
struct PartialMap {
    int r = 0;
    std::vector<int> img;

    static PartialMap identity(int r);
    static PartialMap zero(int r);
    static PartialMap from_permutation(const Permutation& p);  // on {1..r}
    int operator()(int x) const { return x == 0 ? 0 : img[x - 1]; }
    std::string to_string() const;
    friend bool operator==(const PartialMap&, const PartialMap&) = default;
    friend std::strong_ordering operator<=>(const PartialMap&, const PartialMap&) = default;
};

PartialMap compose(const PartialMap& a, const PartialMap& b);  // x -> a(b(x))
int index_of(const PartialMap& a);  // nonzero image values

enum class MonoidKind { full, rook, partial, symmetric };

struct MonoidSpec {
    MonoidKind kind = MonoidKind::full;
    int r = 1;
    std::string to_string() const;
    friend bool operator==(const MonoidSpec&, const MonoidSpec&) = default;
};

bool monoid_contains(const MonoidSpec& spec, const PartialMap& a);
// All members in image-tuple lexicographic order.  Throws when r exceeds the
// supported enumeration bound.
std::vector<PartialMap> enumerate_monoid(const MonoidSpec& spec);

using SubsetMask = std::uint32_t;  // bit x-1 set iff x in the subset

std::vector<int> mask_elements(SubsetMask d);  // ascending, 1-based
SubsetMask elements_mask(const std::vector<int>& elems);

// Total order on the subsets of {1..r} compatible with the S_nu orbits: sort
// by the zero-padded orbit string first, then by the raw element string as
// the within-orbit tie break.  The default instance takes nu = (1,...,1), so
// every subset is its own orbit and the key degenerates to the element
// string.  The reversed variant flips both comparisons; it is still
// orbit-compatible and exists to exercise ordering robustness.
class SubsetOrdering {
public:
    static SubsetOrdering all_singletons(int r);
    static SubsetOrdering with_nu(int r, Composition nu, bool reversed = false);

    int r() const { return r_; }
    const Composition& nu() const { return nu_; }
    bool reversed() const { return reversed_; }
    bool is_default() const { return default_; }

    std::vector<int> s_string(SubsetMask d) const;      // elements ascending
    std::vector<int> orbit_string(SubsetMask d) const;  // block labels, padded to r
    // the comparison key: orbit string first, element string second
    std::pair<std::vector<int>, std::vector<int>> key(SubsetMask d) const;

    bool less(SubsetMask a, SubsetMask b) const { return rank_[a] < rank_[b]; }
    int rank(SubsetMask d) const { return rank_[d]; }
    int orbit_id(SubsetMask d) const { return orbit_[d]; }  // 1..num_orbits
    int num_orbits() const { return norbits_; }
    const std::vector<SubsetMask>& sorted_subsets() const { return sorted_; }

private:
    int r_ = 0;
    Composition nu_;
    bool reversed_ = false;
    bool default_ = true;
    std::vector<int> rank_, orbit_;
    std::vector<SubsetMask> sorted_;
    int norbits_ = 0;
};

// Strictly increasing i-set {c_1 < ... < c_i} in {1..r}.
struct IndexSubset {
    std::vector<int> elems;

    int size() const { return static_cast<int>(elems.size()); }
    SubsetMask mask() const { return elements_mask(elems); }
    static IndexSubset from_mask(SubsetMask d);
    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
    friend std::strong_ordering operator<=>(const IndexSubset&, const IndexSubset&) = default;
};

std::vector<IndexSubset> index_subsets(int i, int r);  // C(i,r), lexicographic

// Pairwise disjoint nonempty subsets, stored sorted under the active ordering.
struct BlockFamily {
    std::vector<SubsetMask> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    SubsetMask support() const;
    friend bool operator==(const BlockFamily&, const BlockFamily&) = default;
    friend std::strong_ordering operator<=>(const BlockFamily&, const BlockFamily&) = default;
};

BlockFamily make_block_family(std::vector<SubsetMask> blocks, const SubsetOrdering& ord);

// phi_C: i-bar -> r-bar, j -> c_j; psi_D: r-bar -> i-bar, x -> block position.
// Both fix 0; represented as image arrays over the finite domain.
struct IndexedMap {
    int dom = 0, cod = 0;
    std::vector<int> img;  // img[x-1], 0 allowed
    int operator()(int x) const { return x == 0 ? 0 : img[x - 1]; }
};

IndexedMap phi_map(const IndexSubset& C, int r);
IndexedMap psi_map(const BlockFamily& D, int r);
IndexedMap compose_maps(const IndexedMap& a, const IndexedMap& b);

struct Factorization {
    Permutation sigma;  // on {0..i-1}
    IndexSubset C;
    BlockFamily D;
    int index() const { return C.size(); }
};

// Unique factorization alpha = phi_C . sigma . psi_D with D sorted under ord.
Factorization factorize(const PartialMap& a, const SubsetOrdering& ord);
PartialMap assemble(const Factorization& f, int r);
PartialMap assemble_map(const IndexSubset& C, const Permutation& sigma,
                        const BlockFamily& D, int r);

// D(M, i, r): families realized as the fiber family of some member of M.
std::vector<BlockFamily> reachable_block_families(const MonoidSpec& spec, int i,
                                                  const SubsetOrdering& ord);

// Interned monoid with a dense multiplication table and cached factorizations.
class MonoidTable {
public:
    MonoidTable(MonoidSpec spec, SubsetOrdering ord);

    const MonoidSpec& spec() const { return spec_; }
    const SubsetOrdering& ordering() const { return ord_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const PartialMap& element(int id) const { return elems_[id]; }
    int id_of(const PartialMap& a) const;
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * elems_.size() + b]; }
    int identity_id() const { return id_identity_; }
    const Factorization& factorization(int id) const { return fact_[id]; }
    int elem_index(int id) const { return fact_[id].index(); }
    const std::vector<int>& realized_indices() const { return indices_; }
    bool has_index(int i) const;
    // D(M, i, r) with a dense id per family
    const std::vector<BlockFamily>& block_families(int i) const;
    int family_id(int i, const BlockFamily& D) const;

private:
    MonoidSpec spec_;
    SubsetOrdering ord_;
    std::vector<PartialMap> elems_;
    std::vector<int> code_to_id_;
    std::vector<std::uint16_t> table_;
    std::vector<Factorization> fact_;
    std::vector<int> indices_;
    int id_identity_ = -1;
    std::vector<std::vector<BlockFamily>> families_;            // per index
    std::vector<std::vector<std::pair<BlockFamily, int>>> family_lookup_;
};

}  // namespace cellalg
