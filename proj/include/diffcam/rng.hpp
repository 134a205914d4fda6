// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace diffcam {

// Counter-based randomness: every sample is a pure function of
// (seed, stream, counter), so pixel loops can run on any number of threads
// and still produce identical images.

inline uint64_t mix64(uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t counter_hash(uint64_t seed, uint64_t stream, uint64_t counter) {
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

/// Uniform in [0, 1) from 53 high bits.
inline double uniform01(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter-derived uniforms. The first
/// uniform is shifted into (0, 1] so the log never sees zero.
inline double counter_gaussian(uint64_t seed, uint64_t stream, uint64_t counter) {
    const double u1 =
        (static_cast<double>(counter_hash(seed, stream, 2 * counter) >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01(counter_hash(seed, stream, 2 * counter + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace diffcam
