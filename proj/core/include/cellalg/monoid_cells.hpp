#pragma once

#include <memory>

#include "cellalg/cell_engine.hpp"
#include "cellalg/monoid.hpp"

namespace cellalg {

struct MurphyElement {
    Partition shape;
    int s_index = 0, t_index = 0;  // into standard_tableaux(shape)
    SparseVec expansion;           // over S_i permutation ids
};

// Murphy basis data for the symmetric group algebra on i letters: the element
// d(s)^-1 x_lambda d(t) with x_lambda the row symmetrizer of the canonical
// row filling.  Rows run over shapes in partitions_of order, (s, t) row-major.
class MurphyBasis {
public:
    explicit MurphyBasis(int i);

    int letters() const { return i_; }
    const std::vector<Permutation>& group() const { return group_; }
    int perm_id(const Permutation& p) const;
    const std::vector<Partition>& shapes() const { return shapes_; }
    const std::vector<StandardTableau>& tableaux(int shape_idx) const {
        return tabs_[shape_idx];
    }
    int rows() const { return static_cast<int>(elements_.size()); }
    int row_of(int shape_idx, int s, int t) const;
    const MurphyElement& element(int row) const { return elements_[row]; }
    const Mat64& fwd() const { return fwd_; }    // rows x group
    const Mat64& conv() const { return conv_; }  // natural -> cell coordinates

private:
    int i_;
    std::vector<Permutation> group_;
    std::vector<Partition> shapes_;
    std::vector<std::vector<StandardTableau>> tabs_;
    std::vector<int> shape_row_offset_;
    std::vector<MurphyElement> elements_;
    Mat64 fwd_, conv_;
};

// process-wide cache, i in [0, 6]
const MurphyBasis& murphy_basis(int i);
std::vector<MurphyElement> murphy_elements(int i);

// Linear extension of sigma -> phi_C . sigma . psi_D into the monoid algebra;
// x is over the S_i permutation ids of murphy_basis(|C|).
SparseVec h_cd(const MonoidTable& table, const IndexSubset& C, const BlockFamily& D,
               const SparseVec& x);

class MonoidAlgebraOracle final : public ProductOracle {
public:
    explicit MonoidAlgebraOracle(std::shared_ptr<const MonoidTable> t) : t_(std::move(t)) {}
    int dimension() const override { return t_->size(); }
    SparseVec mul_basis(int a, int b) const override {
        return SparseVec::unit(t_->mul(a, b));
    }
    const MonoidTable& table() const { return *t_; }

private:
    std::shared_ptr<const MonoidTable> t_;
};

// The monoid algebra R[M] with its cell basis H_{C,D}(m_st), plus the zero
// map layer when 0 is a realized index.  Left indices are (C, s) pairs in
// (index_subsets, tableaux) order; right indices are (D, t) pairs.
struct MonoidCells {
    std::shared_ptr<const MonoidTable> table;
    CellStructure cs;

    int layer_index(const Partition& lam) const { return cs.layer_of(lam); }
    int left_index(int li, int c_idx, int s_idx) const;
    int right_index(int li, int d_idx, int t_idx) const;
};

MonoidCells monoid_cell_structure(const MonoidSpec& spec, const RingSpec& ring,
                                  const SubsetOrdering& ord);

struct RadicalEquivalence {
    bool monoid_zero = false;     // Gram of R[M] at lambda vanishes over the field
    bool symmetric_zero = false;  // Gram of k[S_i] at lambda vanishes
    bool equivalent = false;
};

RadicalEquivalence radical_equivalence_check(const MonoidCells& mc,
                                             const MonoidCells& sym,
                                             const RingSpec& field,
                                             const Partition& lambda);
RadicalEquivalence radical_equivalence_check(const MonoidSpec& spec,
                                             const RingSpec& field,
                                             const Partition& lambda);

}  // namespace cellalg
