#pragma once

#include <cstdint>
#include <random>

namespace rwmeet {

/// splitmix64 finalizer. Fixed, versioned mixing function used everywhere a
/// derived seed is needed (per-run Monte Carlo streams, ER retry seeds).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for stream `index` derived from `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index));
}

/// RNG family is pinned to std::mt19937_64 (bit-identical on every platform).
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built directly from the top 53 bits of the
/// generator output, so the value stream does not depend on any
/// implementation-defined distribution.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) via 53-bit uniform; bound must be < 2^53.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(bound));
}

}  // namespace rwmeet
