#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace freepc {

// Every random draw in the library goes through one seeded generator, so a
// seed pins the whole run. mt19937_64 has a fully specified output sequence,
// which keeps seeded runs identical across platforms.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform draw from [0, bound). Rejection sampling instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

// Uniform draw from [lo, hi], inclusive.
inline std::uint64_t uniform_range(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    assert(lo <= hi);
    return lo + uniform_below(rng, hi - lo + 1);
}

}  // namespace freepc
