#pragma once

#include <string>

#include "cellalg/schur.hpp"

namespace cellalg {

// Divisibility-defined layer sets for the generalized Schur algebras of the
// full transformation monoid in characteristic p.
std::vector<Partition> lambda_p_set(int r, int p);
std::vector<Partition> lambda_Lp_set(int r, int p);

// The full layer poset of the Schur algebras on the given monoid kind.
std::vector<Partition> full_lambda(MonoidKind kind, int r);

struct Prediction {
    MonoidKind kind = MonoidKind::full;
    Side side = Side::left;
    int characteristic = 0;  // 0 or a prime
    int r = 0;
    bool applicable = false;
    std::vector<Partition> lambda0;
};

// The theorem-predicted lambda-zero set: full kind in characteristic 0 gives
// the whole poset, characteristic p gives the lambda_p (right) or lambda_Lp
// (left) set, and any monoid containing the rook maps gives the whole poset
// in every characteristic.  Other combinations come back not applicable.
Prediction predicted_lambda0(MonoidKind kind, Side side, int characteristic, int r);

enum class WitnessKind { char0_full, right_p, left_top, left_p, rook };

std::string to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(const std::string& s);
MonoidKind witness_monoid(WitnessKind kind);
Side witness_side(WitnessKind kind);  // canonical side the construction targets

struct WitnessResult {
    Partition lambda;
    std::string construction;
    BigInt expected;
    BigInt computed;
    bool agree = false;  // equality in the target field
};

// the lambdas the proof construction covers at rank r (p used by the modular
// kinds only)
std::vector<Partition> witness_admissible(WitnessKind kind, int r, int p);

// Rebuilds the proof data (mu, C, D, S, T) for the kind, evaluates the
// bracket of the transferred element against itself through the algebra, and
// compares with the closed form in the field of the given characteristic.
WitnessResult witness_bracket(SchurAlgebra& alg, WitnessKind kind,
                              const Partition& lambda, int p, int characteristic);

long long count_p_restricted(int n, int p);
// Number of parameter tuples of the irreducible classification at rank r in
// characteristic p; matches |lambda_p| on the right and |lambda_Lp| on the
// left.
long long count_irreducible_data(int r, int p, Side side);

}  // namespace cellalg
