#pragma once

#include <cstdint>

namespace genlap {

// splitmix64: 64-bit state advanced by a fixed odd constant, output mixed by
// a finalizer. Passes BigCrush; one multiply-cheap step per draw. Used as the
// project's single reproducible generator: same seed, same build => the same
// byte-for-byte stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw strictly inside (0,1): top 53 bits shifted to the unit
    // interval with a half-step offset, so 0 and 1 are never returned and
    // quantile singularities at the endpoints are never touched.
    double next_unit() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Seed for the i-th independent substream of a master seed. Equals the
// (i+1)-th raw output of SplitMix64(seed): the state after i+1 steps is
// seed + (i+1)*gamma, so the skip-ahead is O(1). Distinct i give decorrelated
// full-period streams, and a parallel run partitioned any way over i produces
// the same draws as a serial one.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace genlap
