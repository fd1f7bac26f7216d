#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gossip {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw. The
/// standard distributions are implementation-defined, so replaying a seed
/// through them is not portable; these hand-rolled draws are.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Exponential dwell with the given rate.
inline double exponential(Rng& rng, double rate) {
    return -std::log1p(-uniform01(rng)) / rate;
}

/// Uniform index in [0, bound) via multiply-shift on 32 high bits.
/// Bias is at most 2^-32 per value, far below anything observable here.
inline std::uint32_t uniform_index(Rng& rng, std::uint32_t bound) {
    const std::uint64_t bits = rng() >> 32;
    return static_cast<std::uint32_t>((bits * bound) >> 32);
}

}  // namespace gossip
