#pragma once

#include <cstdint>

namespace systolic {

// PCG32 (XSH-RR 64/32): a seedable permutation-based generator that produces
// the same stream on every platform. Sweeps construct one generator per
// sample index (seed, stream = index) so results do not depend on the order
// in which samples are evaluated.
struct Pcg32 {
    std::uint64_t state = 0;
    std::uint64_t inc = 1;

    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) {
        inc = (stream << 1u) | 1u;
        next_u32();
        state += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        const std::uint64_t old = state;
        state = old * 6364136223846793005ULL + inc;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32u) | next_u32();
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace systolic
