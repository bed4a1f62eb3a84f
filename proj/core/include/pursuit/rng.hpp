#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pursuit {

// Seeding policy used across the whole tool. Every randomized component draws
// from an mt19937_64 whose seed is derived from (master seed, purpose tag,
// index) so that concurrent workers never share a stream and every output is
// reproducible from the master seed alone.
//
// Derivation rule (stable v1, do not change without bumping file/CSV schemas):
//   h     = FNV-1a 64 of the tag bytes
//   seed' = mix(mix(mix(master ^ h) + index))
// where mix is the SplitMix64 finalizer.

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                    std::uint64_t index = 0) {
    return splitmix64_mix(splitmix64_mix(splitmix64_mix(master ^ fnv1a64(tag)) + index));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t master, std::string_view tag, std::uint64_t index = 0) {
    return Rng(derive_seed(master, tag, index));
}

// Uniform double in [0,1) with exactly 53 random bits. std::uniform_real_distribution
// is implementation-defined, which would break the bit-exact reproducibility contract.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace pursuit
