#pragma once

#include <cstdint>
#include <random>

namespace cutkit {

// Deterministic random stream. std::mt19937_64 output is fully specified by
// the standard, and the bounded draw below avoids the unspecified
// std::uniform_int_distribution, so identical seeds give identical streams
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    // Derive an independent child stream; used when a pipeline hands out
    // fresh randomness per iteration.
    Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
};

} // namespace cutkit
