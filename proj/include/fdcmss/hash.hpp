#pragma once

#include <cstdint>

// Seeded hash functions used by the sketches. FdcmssSketch rows use an
// xxhash-style 64-bit avalanche, LambdaHCount rows use FNV-1a with seed
// mixing. Both are reduced to a column index by multiply-shift, which is
// bias-free for ranges far below 2^64.

namespace fdcmss {

inline std::uint64_t rotl64(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
}

// splitmix64: stream of well-mixed seeds from a single master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// XXH64 of a single 4-byte key.
inline std::uint64_t xxhash64_u32(std::uint32_t key, std::uint64_t seed) {
    constexpr std::uint64_t p1 = 0x9e3779b185ebca87ULL;
    constexpr std::uint64_t p2 = 0xc2b2ae3d27d4eb4fULL;
    constexpr std::uint64_t p3 = 0x165667b19e3779f9ULL;
    constexpr std::uint64_t p5 = 0x27d4eb2f165667c5ULL;
    std::uint64_t h = seed + p5 + 4;
    h ^= static_cast<std::uint64_t>(key) * p1;
    h = rotl64(h, 23) * p2 + p3;
    h ^= h >> 33;
    h *= p2;
    h ^= h >> 29;
    h *= p3;
    h ^= h >> 32;
    return h;
}

// FNV-1a over the four bytes of the key, with the row seed folded in.
inline std::uint64_t fnv1a64_u32(std::uint32_t key, std::uint64_t seed) {
    constexpr std::uint64_t prime = 0x100000001b3ULL;
    std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
    for (int i = 0; i < 4; ++i) {
        h ^= (key >> (8 * i)) & 0xffu;
        h *= prime;
    }
    // final mix; plain FNV is weak in the low bits
    h ^= h >> 32;
    return h;
}

// Maps a 64-bit hash to [0, range) without modulo bias.
inline std::uint32_t reduce_range(std::uint64_t h, std::uint32_t range) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(h) * range) >> 64);
}

}  // namespace fdcmss
