#pragma once

#include <cstdint>

namespace betaturan::detail {

// Deterministic across platforms and toolchains, unlike the standard
// distributions; report bytes must not depend on the stdlib in use.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [1, n]; modulo bias is irrelevant at the ranges used here.
    std::uint64_t one_to(std::uint64_t n) { return 1 + next() % n; }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace betaturan::detail
