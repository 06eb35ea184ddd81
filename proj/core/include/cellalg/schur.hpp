#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "cellalg/cell_engine.hpp"
#include "cellalg/monoid.hpp"
#include "cellalg/monoid_cells.hpp"

namespace cellalg {

// S_mu alpha S_nu together with the data the star products need.
struct DoubleCoset {
    int mu_idx = 0, nu_idx = 0;  // positions in compositions_of(r, n)
    int local = 0;               // coset position within the (mu, nu) pair
    int rep = 0;                 // smallest member id
    std::vector<int> members;    // monoid element ids, ascending
    int index = 0;
    int orbitC = 0;              // orbit of C_rep under S_mu, per-index numbering
    int orbitD = 0;              // orbit of the fiber family under S_nu
    long long nL = 0, nR = 0;    // one-sided coset sizes inside the double coset
};

struct OrbitC {
    Composition mu;                    // ambient composition of r
    std::vector<IndexSubset> members;  // ascending element lists
    Composition comp;                  // mu(C), n parts
};

struct OrbitD {
    Composition nu;
    std::vector<BlockFamily> members;  // blocks sorted under the nu ordering
    Composition comp;                  // nu(D) over the N_nu orbit slots
};

// Bi-invariant summand data at the symmetric group level, shared by every
// Schur summand whose type compositions strip to (a, b): the S_a\S_i/S_b
// double cosets, the semistandard rows, and the unimodular change of basis
// between the m_{ST} elements and the coset sums.
struct SummandType {
    int i = 0;
    Composition a, b;  // stripped
    std::vector<std::vector<int>> scosets;  // permutation ids per S_a sigma S_b
    struct Row {
        int shape_idx = 0, S_idx = 0, T_idx = 0;
    };
    std::vector<Row> rows;
    std::vector<Partition> shapes;
    std::vector<std::vector<SemistandardTableau>> tabs_a, tabs_b;  // per shape
    Mat64 fwd;   // rows x scosets
    Mat64 conv;
};

const SummandType& summand_type(int i, const Composition& a, const Composition& b);

// Left and right generalized Schur algebra Z-forms on the double-coset basis
// of the direct sum of the bi-invariant submodules over all composition
// pairs, with the rescaled star product of the chosen side.
class SchurAlgebra {
public:
    SchurAlgebra(MonoidSpec spec, int r, int n, Side side, bool reversed_ordering = false);

    const MonoidSpec& spec() const;
    int r() const;
    int n() const;
    Side side() const { return side_; }
    const MonoidTable& monoid() const;
    const std::vector<Composition>& compositions() const;
    const SubsetOrdering& ordering_for(int nu_idx) const;

    int dim() const;  // total number of double cosets across all pairs
    const DoubleCoset& coset(int bid) const;
    int coset_id(int mu_idx, int nu_idx, int member) const;  // by any member
    const std::vector<int>& pair_cosets(int mu_idx, int nu_idx) const;  // bids

    const std::vector<OrbitC>& orbitsC(int mu_idx, int i) const;
    const std::vector<OrbitD>& orbitsD(int nu_idx, int i) const;
    int orbitC_index(int mu_idx, const IndexSubset& C) const;
    int orbitD_index(int nu_idx, int i, const BlockFamily& D) const;  // D as a set

    // X(D1) X(D2) regrouped on the double cosets of the outer pair, no
    // rescaling; empty when the middle compositions differ
    std::vector<std::pair<int, long long>> ordinary_product(int b1, int b2) const;
    // the rescaled product of this algebra's side
    SparseVec star_product(const SparseVec& x, const SparseVec& y) const;

    // two-sidedly verified identity; falls back to an exact linear solve if
    // the natural candidate ever failed verification
    const SparseVec& identity_element() const;

    const CellStructure& cells() const { return cells_; }
    CellStructure& mutable_cells() { return cells_; }

    // position of (mu_idx, orbit, S_idx) inside L(lambda); dually for R
    int left_position(int li, int mu_idx, int orbit, int S_idx) const;
    int right_position(int li, int nu_idx, int orbit, int T_idx) const;

    // inverse lookups: which (composition, orbit, tableau) a position names
    struct IndexEntry {
        int comp_idx = 0, orbit = 0, tab = 0;
    };
    IndexEntry left_entry(int li, int pos) const;
    IndexEntry right_entry(int li, int pos) const;

    // direct transfer sum_{C in O_mu} sum_{D in O_nu} phi_C x psi_D of an
    // element of Z[S_i], regrouped on the X(D) basis; throws if the result
    // is not constant on double cosets
    SparseVec phi_transfer(int i, int mu_idx, int orbitC, int nu_idx, int orbitD,
                           const SparseVec& x_over_Si) const;

    struct Core;

private:
    void build_cells();

    std::shared_ptr<Core> core_;
    Side side_;
    CellStructure cells_;
    std::vector<std::vector<std::vector<int>>> Lbase_, Rbase_;  // [layer][comp][orbit]
    std::vector<std::vector<IndexEntry>> Lent_, Rent_;          // [layer][position]
    mutable SparseVec identity_;
    mutable std::once_flag identity_once_;
};

// Orbit of C under the Young subgroup of mu, with the induced composition.
OrbitC orbit_of_C(const Composition& mu, const IndexSubset& C);
// Orbit of D under S_nu acting by preimages, members sorted under ord.
OrbitD orbit_of_D(const Composition& nu, const BlockFamily& D, const SubsetOrdering& ord);

// The unique rho_C with rho . phi_C = phi_{rho C} . rho_C, verified pointwise
// and checked to preserve the mu(C) blocks.
Permutation intertwiner_rho_C(const Composition& mu, const IndexSubset& C,
                              const Permutation& rho);
// The unique pi_D with psi_D . pi = pi_D . psi_{D pi}, verified pointwise and
// checked to preserve the nu(D) blocks.
Permutation intertwiner_pi_D(const Composition& nu, const BlockFamily& D,
                             const Permutation& pi, const SubsetOrdering& ord);

struct CosetPiece {
    IndexSubset C;
    BlockFamily D;
    std::vector<PartialMap> members;
};

// The disjoint pieces phi_C S_{mu(C)} sigma S_{nu(D)} psi_D of S_mu alpha
// S_nu; verifies disjointness and that the union is the full double coset.
std::vector<CosetPiece> coset_decomposition(const Composition& mu, const Composition& nu,
                                            const PartialMap& alpha,
                                            const SubsetOrdering& ord);

CellStructure& schur_cell_structure(SchurAlgebra& alg);

}  // namespace cellalg
