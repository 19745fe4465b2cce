#include "cutkit/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace cutkit {

namespace {

u64 mulmod_generic(u64 a, u64 b, u64 m) {
    return (u64)((unsigned __int128)a * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_generic(r, a, m);
        a = mulmod_generic(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_generic(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 next_prime_at_least(u64 n) {
    if (n <= 2) return 2;
    u64 c = n | 1;
    while (!is_prime_u64(c)) {
        if (c > UINT64_MAX - 2) throw ConfigError("no 64-bit prime at or above requested bound");
        c += 2;
    }
    return c;
}

PrimeField::PrimeField(u64 prime) : p_(prime) {
    if (prime < 2 || !is_prime_u64(prime)) throw ConfigError("field modulus must be prime");
    if (prime >= (1ull << 63)) throw ConfigError("field modulus must fit in 63 bits");
}

u64 PrimeField::inv(u64 a) const {
    if (a == 0) throw ContractError("inverse of zero");
    // Extended Euclid; p is prime so gcd is 1.
    long long t = 0, new_t = 1;
    long long r = (long long)p_, new_r = (long long)a;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += (long long)p_;
    return (u64)t;
}

u64 PrimeField::pow(u64 a, u64 e) const { return powmod(a, e, p_); }

void check_field_for_ground(const FieldConfig& cfg, std::size_t n) {
    if (!is_prime_u64(cfg.prime)) throw ConfigError("configured modulus is not prime");
    u64 n3 = (u64)n * n * n;
    if (cfg.prime <= n3 || cfg.prime <= (1ull << 40))
        throw ConfigError("prime too small for ground-set size " + std::to_string(n));
}

FMatrix FMatrix::identity(u64 prime, std::size_t n) {
    FMatrix m(prime, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// In-place elimination with first-nonzero pivoting. Returns pivot columns in
// order; the matrix ends in row echelon form (reduced if requested).
std::vector<std::size_t> eliminate(FMatrix& m, bool reduced) {
    PrimeField f(m.prime);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m.at(pr, col) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != row) {
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        }
        u64 piv_inv = f.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), piv_inv);
        std::size_t lo = reduced ? 0 : row + 1;
        for (std::size_t r = lo; r < m.rows; ++r) {
            if (r == row) continue;
            u64 factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const FMatrix& m) {
    FMatrix copy = m;
    return eliminate(copy, false).size();
}

std::size_t column_rank_of_subset(const FMatrix& m, std::span<const std::size_t> cols) {
    FMatrix sub(m.prime, m.rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.cols) throw ContractError("column index out of range");
        for (std::size_t r = 0; r < m.rows; ++r) sub.at(r, j) = m.at(r, cols[j]);
    }
    return rank(sub);
}

u64 minor_det(const FMatrix& m, std::span<const std::size_t> rowset,
              std::span<const std::size_t> colset) {
    if (rowset.size() != colset.size()) throw ContractError("minor needs |rowset| = |colset|");
    const std::size_t n = rowset.size();
    PrimeField f(m.prime);
    if (n == 0) return 1;
    FMatrix sub(m.prime, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rowset[i] >= m.rows || colset[i] >= m.cols)
            throw ContractError("minor index out of range");
        for (std::size_t j = 0; j < n; ++j) sub.at(i, j) = m.at(rowset[i], colset[j]);
    }
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && sub.at(pr, col) == 0) ++pr;
        if (pr == n) return 0;
        if (pr != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(sub.at(pr, c), sub.at(col, c));
            det = f.neg(det);
        }
        det = f.mul(det, sub.at(col, col));
        u64 piv_inv = f.inv(sub.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            u64 factor = f.mul(sub.at(r, col), piv_inv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                sub.at(r, c) = f.sub(sub.at(r, c), f.mul(factor, sub.at(col, c)));
        }
    }
    return det;
}

std::pair<FMatrix, std::vector<std::size_t>> standard_form(const FMatrix& m) {
    FMatrix red = m;
    std::vector<std::size_t> pivots = eliminate(red, true);
    FMatrix out(m.prime, pivots.size(), m.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(r, c) = red.at(r, c);
    std::vector<std::size_t> perm = pivots;
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) perm.push_back(c);
    return {std::move(out), std::move(perm)};
}

FMatrix matmul(const FMatrix& lhs, const FMatrix& rhs) {
    if (lhs.cols != rhs.rows || lhs.prime != rhs.prime)
        throw ContractError("matmul shape or field mismatch");
    PrimeField f(lhs.prime);
    FMatrix out(lhs.prime, lhs.rows, rhs.cols);
    for (std::size_t i = 0; i < lhs.rows; ++i)
        for (std::size_t k = 0; k < lhs.cols; ++k) {
            u64 v = lhs.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, rhs.at(k, j)));
        }
    return out;
}

} // namespace cutkit
