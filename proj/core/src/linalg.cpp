#include "cellalg/linalg.hpp"

#include <stdexcept>

namespace cellalg {

MatZ to_bigint(const Mat64& m) {
    MatZ out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (long long v : m[i]) out[i].emplace_back(static_cast<long>(v));
    }
    return out;
}

namespace {

// One-pass Bareiss elimination.  Returns the list of pivot columns; after the
// call m is upper triangular in the pivot rows and m[k][pivot_k] holds the
// k-th leading principal minor (up to row-swap signs tracked in `sign`).
std::vector<int> bareiss(MatZ& m, int& sign) {
    sign = 1;
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row) {
            std::swap(m[pr], m[row]);
            sign = -sign;
        }
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                BigInt t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                BigInt q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                            prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("bareiss: non-exact division");
                m[i][j] = q;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

BigInt det_exact(MatZ m) {
    if (m.empty()) return 1;
    int n = static_cast<int>(m.size());
    if (static_cast<int>(m[0].size()) != n)
        throw std::invalid_argument("det_exact: matrix not square");
    int sign = 1;
    auto pivots = bareiss(m, sign);
    if (static_cast<int>(pivots.size()) < n) return 0;
    return sign * m[n - 1][pivots[n - 1]];
}

int rank_exact(MatZ m) {
    int sign = 1;
    return static_cast<int>(bareiss(m, sign).size());
}

int rank_mod_p(const MatZ& m, int p) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            BigInt v = m[i][j] % p;
            long long w = v.get_si() % p;
            a[i][j] = (w % p + p) % p;
        }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pr = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[rank]);
        // scale pivot row to 1
        long long inv = 1, base = a[rank][col] % p;
        for (long long e = p - 2; e > 0; e >>= 1) {  // Fermat inverse, p prime
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        for (int j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (int j = col; j < cols; ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

Mat64 inverse_unimodular(const Mat64& m) {
    int n = static_cast<int>(m.size());
    MatZ aug(n, std::vector<BigInt>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument("inverse_unimodular: matrix not square");
        for (int j = 0; j < n; ++j) aug[i][j] = static_cast<long>(m[i][j]);
        aug[i][n + i] = 1;
    }
    // fraction-free forward elimination, then exact back substitution
    int sign = 1;
    auto pivots = bareiss(aug, sign);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        throw std::invalid_argument("inverse_unimodular: singular matrix");
    BigInt det = sign * aug[n - 1][n - 1];
    if (det != 1 && det != -1)
        throw std::invalid_argument("inverse_unimodular: determinant is not a unit");

    MatZ inv(n, std::vector<BigInt>(n));
    for (int c = 0; c < n; ++c) {
        // back substitution over the rationals stays integral because the
        // caller guarantees an integer inverse exists
        std::vector<BigInt> x(n);
        for (int i = n - 1; i >= 0; --i) {
            BigInt acc = aug[i][n + c];
            for (int j = i + 1; j < n; ++j) acc -= aug[i][j] * x[j];
            if (acc % aug[i][i] != 0)
                throw std::logic_error("inverse_unimodular: non-integral back substitution");
            x[i] = acc / aug[i][i];
        }
        for (int i = 0; i < n; ++i) inv[i][c] = x[i];
    }
    Mat64 out(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!inv[i][j].fits_slong_p())
                throw std::overflow_error("inverse_unimodular: entry exceeds 64 bits");
            out[i][j] = inv[i][j].get_si();
        }
    return out;
}

std::optional<std::vector<BigInt>> solve_integer(const MatZ& m,
                                                 const std::vector<BigInt>& rhs) {
    if (m.empty()) return std::vector<BigInt>{};
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    MatZ aug(rows, std::vector<BigInt>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = rhs[i];
    }
    int sign = 1;
    auto pivots = bareiss(aug, sign);
    // rows below the last pivot must be identically zero for consistency
    for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
        for (int j = 0; j <= cols; ++j)
            if (aug[i][j] != 0) return std::nullopt;
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = nonzero

    std::vector<BigInt> x(cols, 0);
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
        int pc = pivots[k];
        BigInt acc = aug[k][cols];
        for (int j = pc + 1; j < cols; ++j) acc -= aug[k][j] * x[j];
        if (acc % aug[k][pc] != 0) return std::nullopt;
        x[pc] = acc / aug[k][pc];
    }
    // free columns default to zero; verify the candidate on the original system
    for (int i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < cols; ++j) acc += m[i][j] * x[j];
        if (acc != rhs[i]) return std::nullopt;
    }
    return x;
}

Mat64 mat_mul(const Mat64& a, const Mat64& b) {
    std::size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    Mat64 out(n, std::vector<long long>(mcols, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            long long v = a[i][l];
            if (v == 0) continue;
            for (std::size_t j = 0; j < mcols; ++j) out[i][j] += v * b[l][j];
        }
    return out;
}

bool is_identity(const Mat64& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace cellalg
