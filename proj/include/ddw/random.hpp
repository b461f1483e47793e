#pragma once

#include <cstdint>
#include <random>

namespace ddw {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent generator keyed by (seed, stage, index). Work items that may
/// run on any thread draw from their own substream, so results do not
/// depend on scheduling.
inline Rng substream(std::uint64_t seed, std::uint64_t stage, std::uint64_t index) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ stage);
    h = mix64(h ^ (index + 0x632BE59BD9B4E019ULL));
    return Rng(h);
}

/// Uniform integer in [lo, hi].
inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Uniform real in [0, 1).
inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace ddw
