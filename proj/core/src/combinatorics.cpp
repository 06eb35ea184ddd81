#include "cellalg/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cellalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        index_ += parts_[j];
    }
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(parts_[j]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int i) {
    if (i < 0) throw std::invalid_argument("partitions_of: negative i");
    std::vector<Partition> out;
    std::vector<int> cur;
    // reverse-lexicographic: largest first part first
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, i, i == 0 ? 1 : i);
    return out;
}

bool dominance_geq(const Partition& a, const Partition& b) {
    if (a.index() != b.index())
        throw std::invalid_argument("dominance_geq: index mismatch");
    int sa = 0, sb = 0;
    int rows = std::max(a.rows(), b.rows());
    for (int j = 1; j <= rows; ++j) {
        sa += a.part(j);
        sb += b.part(j);
        if (sa < sb) return false;
    }
    return true;
}

bool lambda_geq(const Partition& a, const Partition& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return dominance_geq(a, b);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("Composition: negative part");
        weight_ += p;
    }
}

int Composition::block_of(int x) const {
    if (x < 1 || x > weight_)
        throw std::out_of_range("Composition::block_of");
    int acc = 0;
    for (int j = 0; j < size(); ++j) {
        acc += parts_[j];
        if (x <= acc) return j + 1;
    }
    throw std::logic_error("Composition::block_of: unreachable");
}

std::pair<int, int> Composition::block_range(int j) const {
    int lo = 1;
    for (int k = 1; k < j; ++k) lo += parts_[k - 1];
    return {lo, lo + parts_[j - 1]};
}

Composition Composition::stripped() const {
    std::vector<int> nz;
    for (int p : parts_)
        if (p > 0) nz.push_back(p);
    return Composition(nz);
}

std::vector<int> Composition::nonzero_slots() const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (parts_[j] > 0) out.push_back(j + 1);
    return out;
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(parts_[j]);
    }
    return s + ")";
}

std::vector<Composition> compositions_of(int r, int n) {
    if (r < 0 || n < 0) throw std::invalid_argument("compositions_of: negative arguments");
    std::vector<Composition> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        if (pos == n - 1) {
            cur[pos] = rest;
            out.emplace_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
            cur[pos] = 0;
        }
    };
    if (n == 0) {
        if (r == 0) out.emplace_back(cur);
        return out;
    }
    rec(rec, 0, r);
    return out;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < degree(); ++x) inv[img_[x]] = x;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (img_[x] != x) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("Permutation product: degree mismatch");
    std::vector<int> img(a.degree());
    for (int x = 0; x < a.degree(); ++x) img[x] = a.img_[b.img_[x]];
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Permutation> young_subgroup(const Composition& mu) {
    int n = mu.weight();
    std::vector<Permutation> out{Permutation::identity(n)};
    for (int j = 1; j <= mu.size(); ++j) {
        auto [lo, hi] = mu.block_range(j);
        if (hi - lo <= 1) continue;
        // all permutations of the block elements lo-1 .. hi-2 (0-based)
        std::vector<int> block(hi - lo);
        std::iota(block.begin(), block.end(), lo - 1);
        std::vector<Permutation> next;
        std::vector<int> perm = block;
        do {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t k = 0; k < block.size(); ++k) img[block[k]] = perm[k];
            Permutation blockperm(img);
            for (const auto& p : out) next.push_back(blockperm * p);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_young_subgroup(const Permutation& p, const Composition& mu) {
    if (p.degree() != mu.weight()) return false;
    for (int x = 0; x < p.degree(); ++x)
        if (mu.block_of(x + 1) != mu.block_of(p(x) + 1)) return false;
    return true;
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {}

std::vector<int> StandardTableau::row_word() const {
    std::vector<int> w;
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

StandardTableau StandardTableau::canonical(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int j = 1; j <= shape.rows(); ++j) {
        std::vector<int> row(shape.part(j));
        std::iota(row.begin(), row.end(), next);
        next += shape.part(j);
        rows.push_back(std::move(row));
    }
    return StandardTableau(shape, std::move(rows));
}

Permutation StandardTableau::word_permutation() const {
    int n = shape_.index();
    StandardTableau canon = canonical(shape_);
    std::vector<int> img(n);
    for (std::size_t rw = 0; rw < rows_.size(); ++rw)
        for (std::size_t c = 0; c < rows_[rw].size(); ++c)
            img[canon.rows()[rw][c] - 1] = rows_[rw][c] - 1;
    return Permutation(img);
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    int n = shape.index();
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= shape.rows(); ++j)
        rows.emplace_back(shape.part(j), 0);

    std::vector<StandardTableau> out;
    // place 1..n one at a time at the first free cell of some row; growth by
    // increasing values keeps rows and columns increasing automatically when
    // the local checks pass
    std::vector<int> filled(std::max(shape.rows(), 1), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.emplace_back(shape, rows);
            return;
        }
        for (int r = 0; r < shape.rows(); ++r) {
            int c = filled[r];
            if (c >= shape.part(r + 1)) continue;
            if (r > 0 && filled[r - 1] <= c) continue;  // cell above must be filled
            rows[r][c] = v;
            ++filled[r];
            self(self, v + 1);
            --filled[r];
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_word() < b.row_word();
    });
    return out;
}

SemistandardTableau::SemistandardTableau(Partition shape, Composition type,
                                         std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), type_(std::move(type)), rows_(std::move(rows)) {}

std::vector<int> SemistandardTableau::row_word() const {
    std::vector<int> w;
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape,
                                                       const Composition& type) {
    if (type.weight() != shape.index())
        throw std::invalid_argument("semistandard_tableaux: weight mismatch");
    int nvals = type.size();
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= shape.rows(); ++j)
        rows.emplace_back(shape.part(j), 0);
    std::vector<int> remaining = type.parts().empty() ? std::vector<int>{} : type.parts();

    std::vector<SemistandardTableau> out;
    // fill cells in row-major order
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.rows()) {
            out.emplace_back(shape, type, rows);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);      // weak along rows
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);  // strict down columns
        for (int v = lo; v <= nvals; ++v) {
            if (remaining[v - 1] == 0) continue;
            rows[r][c] = v;
            --remaining[v - 1];
            self(self, nr, nc);
            ++remaining[v - 1];
        }
    };
    if (shape.rows() == 0) {
        out.emplace_back(shape, type, rows);
    } else {
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end(),
              [](const SemistandardTableau& a, const SemistandardTableau& b) {
                  return a.row_word() < b.row_word();
              });
    return out;
}

std::vector<std::vector<int>> weight_filling(const StandardTableau& t,
                                             const Composition& type) {
    std::vector<std::vector<int>> out = t.rows();
    for (auto& row : out)
        for (auto& e : row) e = type.block_of(e);
    return out;
}

int k_p(const Partition& lambda, int p) {
    if (lambda.empty())
        throw std::invalid_argument("k_p: empty partition rejected");
    if (p < 2) throw std::invalid_argument("k_p: p must be prime");
    int k = 0;
    for (;;) {
        long long q = 1;
        for (int j = 0; j <= k; ++j) q *= p;
        bool all = true;
        for (int part : lambda.parts())
            if (part % q != 0) {
                all = false;
                break;
            }
        if (!all) return k;
        ++k;
    }
}

bool is_p_restricted(const Partition& lambda, int p) {
    for (int j = 1; j <= lambda.rows(); ++j)
        if (lambda.part(j) - lambda.part(j + 1) >= p) return false;
    return true;
}

PAdicDecomposition p_adic_decompose(const Partition& lambda, int p) {
    if (lambda.empty())
        throw std::invalid_argument("p_adic_decompose: empty partition rejected");
    if (p < 2) throw std::invalid_argument("p_adic_decompose: p must be prime");

    PAdicDecomposition dec;
    dec.p = p;
    dec.m = k_p(lambda, p);

    // one pass of the column-splitting construction per level, highest first
    std::vector<std::pair<int, Partition>> levels;  // (level, restricted partition)
    Partition cur = lambda;
    while (!cur.empty()) {
        int R = cur.rows();
        std::vector<int> delta(R);
        for (int j = 1; j <= R; ++j) delta[j - 1] = cur.part(j) - cur.part(j + 1);
        int maxd = *std::max_element(delta.begin(), delta.end());
        int k = 0;
        long long pk = 1;
        while (pk * p <= maxd) {
            pk *= p;
            ++k;
        }
        std::vector<int> q(R), rem(R);
        for (int j = 0; j < R; ++j) {
            q[j] = static_cast<int>(delta[j] / pk);
            rem[j] = static_cast<int>(delta[j] % pk);
        }
        // restricted partition at this level: row j has sum of q_i for i >= j
        std::vector<int> qrows;
        for (int j = 0; j < R; ++j) {
            int len = 0;
            for (int i = j; i < R; ++i) len += q[i];
            if (len > 0) qrows.push_back(len);
        }
        levels.emplace_back(k, Partition(qrows));
        // remainder partition from the r_i columns
        std::vector<int> rrows;
        for (int j = 0; j < R; ++j) {
            int len = 0;
            for (int i = j; i < R; ++i) len += rem[i];
            if (len > 0) rrows.push_back(len);
        }
        cur = Partition(rrows);
    }

    dec.M = levels.front().first;
    if (levels.back().first != dec.m)
        throw std::logic_error("p_adic_decompose: lowest level disagrees with k_p");
    dec.s_levels.assign(dec.M - dec.m + 1, 0);
    dec.restricted.assign(dec.M - dec.m + 1, Partition());
    for (auto& [k, part] : levels) {
        dec.s_levels[k - dec.m] = part.index();
        dec.restricted[k - dec.m] = part;
    }
    return dec;
}

Partition p_adic_reconstruct(const PAdicDecomposition& dec) {
    if (dec.s_levels.empty() || dec.s_levels.front() <= 0)
        throw std::invalid_argument("p_adic_reconstruct: s_m must be positive");
    long long pk = 1;
    for (int j = 0; j < dec.m; ++j) pk *= dec.p;
    std::vector<long long> rows;
    for (std::size_t lv = 0; lv < dec.restricted.size(); ++lv) {
        const Partition& sigma = dec.restricted[lv];
        if (sigma.index() != dec.s_levels[lv])
            throw std::invalid_argument("p_adic_reconstruct: level weight mismatch");
        if (!is_p_restricted(sigma, dec.p))
            throw std::invalid_argument("p_adic_reconstruct: level not p-restricted");
        for (int j = 1; j <= sigma.rows(); ++j) {
            if (static_cast<std::size_t>(j) > rows.size()) rows.push_back(0);
            rows[j - 1] += sigma.part(j) * pk;
        }
        pk *= dec.p;
    }
    std::vector<int> parts;
    for (long long len : rows)
        if (len > 0) parts.push_back(static_cast<int>(len));
    return Partition(parts);
}

long long factorial(int n) {
    long long f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}

}  // namespace cellalg
