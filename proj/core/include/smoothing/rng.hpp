#pragma once

#include <cstdint>

namespace smoothing {

// SplitMix64: one 64-bit word of state, one finalizer per draw.

inline constexpr std::uint64_t splitmix_gamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() { return mix64(state_ += splitmix_gamma); }

    /// Uniform in [0,1), 53 mantissa bits.
    constexpr double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Stream split rule: trial i of a run seeded with s draws from an
/// independent generator seeded with mix64(s + i*splitmix_gamma). Trials are
/// order-independent, so any partition of trials over workers replays the
/// exact same streams.
constexpr SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed + trial * splitmix_gamma));
}

}  // namespace smoothing
