#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cellalg/combinatorics.hpp"
#include "cellalg/linalg.hpp"

namespace cellalg {

struct RingSpec {
    enum class Kind { integers, rationals, prime_field };
    Kind kind = Kind::integers;
    int p = 0;

    static RingSpec integers() { return {Kind::integers, 0}; }
    static RingSpec rationals() { return {Kind::rationals, 0}; }
    static RingSpec gf(int p);
    bool is_field() const { return kind != Kind::integers; }
    int characteristic() const { return kind == Kind::prime_field ? p : 0; }
    std::string to_string() const;
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using Coeff = long long;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// Finitely supported exact-coefficient vector over a basis; terms sorted by
// id, zero coefficients never stored.
struct SparseVec {
    std::vector<std::pair<int, Coeff>> terms;

    static SparseVec unit(int id) { return SparseVec{{{id, 1}}}; }
    bool empty() const { return terms.empty(); }
    void add_term(int id, Coeff c);  // unsorted accumulate; call normalize()
    void normalize();
    SparseVec& axpy(Coeff a, const SparseVec& x);
    friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

// Total product on the natural basis of an algebra.  Implementations memoize
// behind this interface; results must not depend on call order.
class ProductOracle {
public:
    virtual ~ProductOracle() = default;
    virtual int dimension() const = 0;
    virtual SparseVec mul_basis(int a, int b) const = 0;
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
};

// One direct summand of the change of basis: the cell elements with natural
// support inside `natural_ids`.  fwd[c][n] is the coefficient of natural n in
// cell element c; conv converts natural coordinates to cell coordinates and
// is the inverse transpose of fwd (determinant required to be a unit).
struct CellBlock {
    std::vector<int> natural_ids;
    std::vector<int> cell_ids;
    Mat64 fwd;
    Mat64 conv;
};

struct CellIndexInfo {
    int layer = 0, left = 0, right = 0;
};

enum class Side { left, right };

// A concrete cell datum: a poset of layers, left/right index sets, a basis of
// cell elements given blockwise over the natural basis, and a product oracle.
class CellStructure {
public:
    std::vector<Partition> lambdas;
    // layer_geq[a][b] says layer a >= layer b; populated from lambda_geq but
    // kept as data so tests can exercise broken posets
    std::vector<std::vector<char>> layer_geq;
    std::vector<std::vector<std::string>> left_labels, right_labels;
    std::vector<std::string> natural_labels;
    std::vector<CellBlock> blocks;
    std::shared_ptr<const ProductOracle> oracle;

    // builds the id maps and validates that blocks partition both bases and
    // that every conv is consistent with fwd
    void finalize();

    int dim() const { return dim_; }
    int num_layers() const { return static_cast<int>(lambdas.size()); }
    int Lsize(int li) const { return static_cast<int>(left_labels[li].size()); }
    int Rsize(int li) const { return static_cast<int>(right_labels[li].size()); }
    int layer_offset(int li) const { return layer_offset_[li]; }
    int cell_id(int li, int l, int t) const {
        return layer_offset_[li] + l * Rsize(li) + t;
    }
    const CellIndexInfo& cell_info(int cid) const { return info_[cid]; }
    bool geq(int a, int b) const { return layer_geq[a][b] != 0; }
    int layer_of(const Partition& lam) const;

    // natural expansion of a cell basis element
    const SparseVec& cell_natural(int cid) const { return cell_nat_[cid]; }
    // exact cell coordinates of a natural-basis vector
    std::vector<std::pair<int, Coeff>> to_cell_coords(const SparseVec& x) const;
    SparseVec from_cell_coords(const std::vector<std::pair<int, Coeff>>& u) const;

private:
    int dim_ = 0;
    std::vector<int> layer_offset_;
    std::vector<CellIndexInfo> info_;
    std::vector<SparseVec> cell_nat_;
    std::vector<int> natural_block_;
    std::vector<int> natural_pos_;
};

// Coordinates of x on layer li after discarding every coordinate at a layer
// strictly above li; entry [l][t].
Mat64 layer_coefficients(const CellStructure& cs, const SparseVec& x, int li);

struct AxiomCheck {
    bool pass = true;
    std::string detail;  // first counterexample when pass is false
};

// Exhaustive check of the two defining multiplication properties: for every
// natural basis element and every cell element, the product reduced at its
// layer must sit on the matching column (row), with coefficients independent
// of the right (left) index, and all off-layer support strictly higher.
AxiomCheck verify_cell_axioms(const CellStructure& cs);

// The scalar with  aux_l C_t . l C_aux_t  =  r . aux_l C_aux_t  modulo higher
// layers; throws if the reduced product is not such a multiple.
Coeff r_st(const CellStructure& cs, int li, int l, int t, int aux_l, int aux_t);
Coeff r_st(const CellStructure& cs, int li, int l, int t);  // aux = (l, t)

struct GramReport {
    Partition lambda;
    int rows = 0, cols = 0;                    // |R(lambda)| x |L(lambda)|
    std::vector<std::vector<BigInt>> entries;  // over the integers

    bool nonzero_over(const RingSpec& field) const;
    int rank_over(const RingSpec& field) const;
};

GramReport gram_matrix(const CellStructure& cs, int li);

// Gram matrices for all layers with optional parallel computation; all
// queries reduce the one integer matrix per layer.
class GramSet {
public:
    GramSet(const CellStructure& cs, int jobs = 1);

    const GramReport& report(int li) const { return reports_[li]; }
    std::vector<int> lambda_zero(const RingSpec& field) const;       // layer ids
    std::map<int, int> irreducible_dims(const RingSpec& field) const;  // layer -> rank
    bool quasi_hereditary_sufficient(const RingSpec& field) const;

private:
    const CellStructure& cs_;
    std::vector<GramReport> reports_;
};

// Matrix of a acting on the lambda cell module: left action on the L indices
// (columns indexed by source l), right action on the R indices.
Mat64 action_matrix(const CellStructure& cs, const SparseVec& a, int li, Side side);

}  // namespace cellalg
