#pragma once

#include <cstdint>

namespace erpoly::detail {

// splitmix64: tiny deterministic generator, identical output on every
// platform. Used wherever reproducibility per seed is part of the contract.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bias is irrelevant for our uses.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

}  // namespace erpoly::detail
