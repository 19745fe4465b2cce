#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutkit/rng.hpp"

namespace cutkit {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultPrime = (1ull << 61) - 1;

struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime_u64(u64 n);
u64 next_prime_at_least(u64 n);

// Arithmetic in Z/p for a prime p < 2^63. All inputs and outputs are reduced.
class PrimeField {
public:
    explicit PrimeField(u64 prime);

    u64 prime() const { return p_; }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const {
        if (p_ == kDefaultPrime) {
            // 2^61 - 1 is Mersenne: fold the high bits twice.
            unsigned __int128 z = (unsigned __int128)a * b;
            u64 lo = (u64)z & kDefaultPrime;
            u64 hi = (u64)(z >> 61);
            u64 s = lo + hi;
            if (s >= kDefaultPrime) s -= kDefaultPrime;
            return s;
        }
        return (u64)((unsigned __int128)a * b % p_);
    }
    u64 inv(u64 a) const;
    u64 pow(u64 a, u64 e) const;

    u64 reduce_signed(long long v) const {
        long long m = v % (long long)p_;
        if (m < 0) m += (long long)p_;
        return (u64)m;
    }
    u64 random_element(Rng& rng) const { return rng.below(p_); }
    u64 random_nonzero(Rng& rng) const { return 1 + rng.below(p_ - 1); }

private:
    u64 p_;
};

// Run config for the randomized constructions: the field plus the seed that
// feeds every Rng in a pipeline.
struct FieldConfig {
    u64 prime = kDefaultPrime;
    u64 seed = 0;
};

// Requires prime > max(n^3, 2^40) for the largest ground-set size in play.
void check_field_for_ground(const FieldConfig& cfg, std::size_t n);

// Dense row-major matrix over Z/p.
struct FMatrix {
    u64 prime = kDefaultPrime;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<u64> a;

    FMatrix() = default;
    FMatrix(u64 prime_, std::size_t r, std::size_t c)
        : prime(prime_), rows(r), cols(c), a(r * c, 0) {}

    u64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    u64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static FMatrix identity(u64 prime, std::size_t n);
};

// Rank over Z/p; the input is not modified.
std::size_t rank(const FMatrix& m);

// Rank of the submatrix given by a set of column indices.
std::size_t column_rank_of_subset(const FMatrix& m, std::span<const std::size_t> cols);

// Determinant of the square submatrix picked by rowset x colset.
u64 minor_det(const FMatrix& m, std::span<const std::size_t> rowset,
              std::span<const std::size_t> colset);

// Row-reduced matrix of shape rank x cols together with a column permutation
// listing the pivot columns first; the column matroid is unchanged and the
// pivot columns form an identity.
std::pair<FMatrix, std::vector<std::size_t>> standard_form(const FMatrix& m);

// Matrix product, used by truncation.
FMatrix matmul(const FMatrix& lhs, const FMatrix& rhs);

} // namespace cutkit
