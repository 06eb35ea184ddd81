#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace cellalg {

using BigInt = mpz_class;
using MatZ = std::vector<std::vector<BigInt>>;
using Mat64 = std::vector<std::vector<long long>>;

MatZ to_bigint(const Mat64& m);

// Fraction-free Gaussian elimination (Bareiss).  Exact; no floating point.
BigInt det_exact(MatZ m);
int rank_exact(MatZ m);
int rank_mod_p(const MatZ& m, int p);

// Inverse of an integer matrix with determinant +-1; throws otherwise.
Mat64 inverse_unimodular(const Mat64& m);

// Solve m * x = rhs exactly over the rationals; returns the solution only if
// one exists and is integral.  Used for identity-element recovery.
std::optional<std::vector<BigInt>> solve_integer(const MatZ& m,
                                                 const std::vector<BigInt>& rhs);

Mat64 mat_mul(const Mat64& a, const Mat64& b);
bool is_identity(const Mat64& m);

}  // namespace cellalg
