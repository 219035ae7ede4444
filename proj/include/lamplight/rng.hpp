#pragma once

#include <cstdint>
#include <random>

namespace lamplight {

// mt19937_64 output is fully specified by the standard; std::uniform_int_distribution
// is not. Everything randomized goes through these helpers so that a seed pins the
// byte-exact result on every platform/compiler.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    // rejection sampling, unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline bool bernoulli_in(Rng& rng, std::uint64_t num, std::uint64_t den) {
    return uniform_below(rng, den) < num;
}

} // namespace lamplight
