#pragma once

#include <cstdint>
#include <random>

#include "sepsplit/mask.hpp"

namespace sepsplit {

// All randomized operations use std::mt19937_64, whose output sequence is
// fixed by the standard, so results are identical across platforms and
// standard libraries for a given seed. Draws below consume raw engine words
// directly; std::uniform_int_distribution is avoided on purpose because its
// output is implementation-defined.

// Uniform subset of [k]: one engine word per 64 elements, high bits masked.
inline SubsetMask random_subset(std::mt19937_64& rng, int k) {
    SubsetMask a(k);
    if (k <= 64) {
        std::uint64_t bits = rng();
        if (k < 64) bits &= (std::uint64_t{1} << k) - 1;
        a.set_bits(bits);
        return a;
    }
    for (int e = 1; e <= k; e += 64) {
        std::uint64_t bits = rng();
        for (int j = 0; j < 64 && e + j <= k; ++j)
            if ((bits >> j) & 1) a.add(e + j);
    }
    return a;
}

// Uniform integer in [0, n) by rejection sampling on masked engine words.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    if ((n & (n - 1)) == 0) return rng() & (n - 1);  // power of two
    std::uint64_t mask = ~std::uint64_t{0};
    int shift = 0;
    while ((n - 1) >> (63 - shift) == 0 && shift < 63) ++shift;
    mask >>= shift;
    for (;;) {
        std::uint64_t v = rng() & mask;
        if (v < n) return v;
    }
}

}  // namespace sepsplit
