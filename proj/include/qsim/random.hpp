#pragma once

#include <cstdint>
#include <random>

namespace qsim {

/// All probabilistic operations take an injected engine; there is no global
/// randomness anywhere in the library.
using RandomEngine = std::mt19937_64;

/// SplitMix64 finalizer. Used to derive well-separated substream seeds so
/// that independent attempts/trials can each own a deterministic engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline RandomEngine substream(std::uint64_t seed, std::uint64_t stream_index) {
    return RandomEngine(splitmix64(seed ^ splitmix64(stream_index)));
}

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
/// std::uniform_real_distribution is not guaranteed to produce identical
/// sequences across standard libraries; this mapping is.
inline double uniform_double(RandomEngine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [lo, hi] via rejection sampling.
inline std::uint64_t uniform_u64(RandomEngine& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) {
        return rng(); // [lo, hi] covers the whole 64-bit range
    }
    const std::uint64_t rem = (std::uint64_t(-1) % span + 1) % span; // 2^64 mod span
    std::uint64_t draw = rng();
    if (rem != 0) {
        const std::uint64_t bound = std::uint64_t(0) - rem; // multiples of span fit below
        while (draw >= bound) {
            draw = rng();
        }
    }
    return lo + draw % span;
}

} // namespace qsim
