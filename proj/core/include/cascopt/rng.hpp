// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

// Counter-based random bits. Every draw is a pure hash of
// (seed, stream, scenario, counter), so a scenario is reproducible no matter
// in which order - or on how many threads - its coins are flipped.

namespace cascopt::rng {

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline constexpr uint64_t splitmix64(uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline constexpr uint64_t hash2(uint64_t a, uint64_t b) {
    return splitmix64(splitmix64(a) ^ (b + kGolden));
}

inline constexpr uint64_t hash3(uint64_t a, uint64_t b, uint64_t c) {
    return splitmix64(hash2(a, b) ^ (c + kGolden));
}

inline constexpr uint64_t hash4(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    return splitmix64(hash3(a, b, c) ^ (d + kGolden));
}

// Uniform double in [0, 1) from the top 53 bits.
inline constexpr double u01(uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Disjoint sub-generators derived from one user-facing seed. Training,
// validation and test cascades must never share coins.
enum class Stream : uint64_t {
    training = 1,
    validation = 2,
    testing = 3,
    greedy_fresh = 4,
    geometry = 5,
    costs = 6,
    occupancy = 7,
    metapop_direct = 8,
};

inline constexpr uint64_t derive(uint64_t seed, Stream s, uint64_t salt = 0) {
    return hash3(seed, static_cast<uint64_t>(s), salt);
}

// One Bernoulli coin keyed by (seed, a, b). Returns true with probability p.
inline constexpr bool coin(uint64_t seed, uint64_t a, uint64_t b, double p) {
    return u01(hash3(seed, a, b)) < p;
}

}  // namespace cascopt::rng
