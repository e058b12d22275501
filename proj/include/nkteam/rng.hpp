// Random stream used throughout the simulator.
//
// Everything downstream of a seed must be bit-reproducible across platforms,
// so no <random> distributions are used: SplitMix64 produces raw 64-bit
// words and the conversions to [0,1) doubles and bounded integers are
// implemented here with fully specified arithmetic.

#pragma once

#include <cstdint>

namespace nkteam {

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

// SplitMix64 output/finalizer function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Derives a child seed from a base seed and a salt (run index, grid
// coordinate, ...). Chaining derive_seed calls gives independent,
// individually re-runnable streams.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return mix64(base + kGolden64 * (salt + 1));
}

// Deterministic 64-bit PRNG, one stream per simulation run.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden64;
        return mix64(state_);
    }

    // Uniform double in [0, 1), 53 bits of mantissa.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Multiply-shift reduction; the bias of
    // at most n/2^64 is far below anything the simulation can resolve.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace nkteam
