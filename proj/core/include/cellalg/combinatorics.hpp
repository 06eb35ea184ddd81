#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cellalg {

// Integer partition, weakly decreasing positive parts.  The empty partition
// (index 0) is a legal value and acts as the top layer of the poset order
// below whenever the zero map belongs to the monoid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int index() const { return index_; }  // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based row length, 0 past the last row
    int part(int j) const {
        return (j >= 1 && j <= rows()) ? parts_[j - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    // lexicographic on part lists; used only for canonical container order
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int index_ = 0;
};

// All partitions of i in reverse-lexicographic order, e.g. (3),(2,1),(1,1,1).
// partitions_of(0) = { empty }.
std::vector<Partition> partitions_of(int i);

// Dominance on partitions of equal index: true iff every partial sum of a
// is >= the matching partial sum of b.  Throws on index mismatch.
bool dominance_geq(const Partition& a, const Partition& b);

// The layer order: a >= b iff index(a) < index(b), or equal index and
// dominance_geq(a, b).  Lower index sits higher in the poset.
bool lambda_geq(const Partition& a, const Partition& b);

// Composition: non-negative parts with a declared length (zeros allowed).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int weight() const { return weight_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int part(int j) const { return parts_[j - 1]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }

    // 1-based block index of x in 1..weight (blocks are consecutive runs of
    // sizes part(1), part(2), ...).  Requires 1 <= x <= weight.
    int block_of(int x) const;
    // half-open element range [lo, hi) of block j, 1-based elements
    std::pair<int, int> block_range(int j) const;

    // parts with zeros removed
    Composition stripped() const;
    // indices (1-based) of nonzero parts, in order
    std::vector<int> nonzero_slots() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All compositions of r with exactly n parts (zeros allowed), in
// lexicographically decreasing order starting from (r, 0, ..., 0).
std::vector<Composition> compositions_of(int r, int n);

// Permutation of {0, ..., n-1}; composition acts on values, (a*b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }
    Permutation inverse() const;
    bool is_identity() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;
};

// All of S_n ordered by image tuple.
std::vector<Permutation> symmetric_group(int n);

// The Young subgroup of mu: all permutations of {0..weight-1} preserving each
// block of mu.  Cardinality is the product of the part factorials.
std::vector<Permutation> young_subgroup(const Composition& mu);
// true iff p preserves every block of mu
bool in_young_subgroup(const Permutation& p, const Composition& mu);

// Standard tableau: shape lambda, entries 1..i, rows and columns strictly
// increasing.
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int row, int col) const { return rows_[row][col]; }  // 0-based
    std::vector<int> row_word() const;

    // canonical tableau of the shape, filled 1..i row by row
    static StandardTableau canonical(const Partition& shape);
    // permutation d with d(canonical) = this, acting on entries (0-based values)
    Permutation word_permutation() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// All standard tableaux of the shape, ordered by row word.  The empty shape
// yields a single empty tableau.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// Semistandard tableau: weakly increasing rows, strictly increasing columns,
// entry j occurring type.part(j) times.
class SemistandardTableau {
public:
    SemistandardTableau() = default;
    SemistandardTableau(Partition shape, Composition type,
                        std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const Composition& type() const { return type_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<int> row_word() const;

    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

private:
    Partition shape_;
    Composition type_;
    std::vector<std::vector<int>> rows_;
};

// All semistandard tableaux of the shape and content type, ordered by row
// word.  Throws if weight(type) != index(shape).
std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape,
                                                       const Composition& type);

// Replace each entry e of t by type.block_of(e); the result is the weight
// word filling of t.  Returns the rows of the relabeled filling.
std::vector<std::vector<int>> weight_filling(const StandardTableau& t,
                                             const Composition& type);

// Largest k with p^k dividing every part; rejects the empty partition.
int k_p(const Partition& lambda, int p);

// true iff all consecutive row differences and the last part are < p
bool is_p_restricted(const Partition& lambda, int p);

// Levelwise p-adic decomposition of a partition: level i carries a
// p-restricted partition of s_levels[i - m]; the original partition is
// recovered by scaling level-i rows by p^i and adding row-wise.
struct PAdicDecomposition {
    int p = 0;
    int m = 0;  // lowest level, equal to k_p of the source partition
    int M = 0;  // highest level
    std::vector<int> s_levels;            // s_m .. s_M, s_m > 0
    std::vector<Partition> restricted;    // one partition of s_i per level
};

PAdicDecomposition p_adic_decompose(const Partition& lambda, int p);
Partition p_adic_reconstruct(const PAdicDecomposition& dec);

long long factorial(int n);
long long binomial(int n, int k);

}  // namespace cellalg
