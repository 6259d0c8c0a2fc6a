#pragma once

#include <cstdint>

namespace safereach {

/// SplitMix64 (Steele/Lea/Vigna).  Chosen over std::mt19937 because the
/// algorithm is specified to the bit, so seeded oracle results reproduce
/// across platforms and implementations.
struct SplitMix64 {
    std::uint64_t state{0};

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), using the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

} // namespace safereach
