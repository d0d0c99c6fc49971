#pragma once

#include <cstdint>
#include <random>

namespace tbd {

/// splitmix64 step; used to derive independent seed streams from one
/// master seed so that parallel generation order never changes output.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Counter-based stream derivation: mixes (seed, stream id, counter).
inline uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t counter = 0) {
    return splitmix64(splitmix64(seed ^ splitmix64(stream)) ^ counter);
}

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t stream, uint64_t counter = 0) {
    return std::mt19937_64(derive_seed(seed, stream, counter));
}

}  // namespace tbd
