#pragma once

#include <cstdint>

namespace wig {

// SplitMix64: one 64-bit word of state, reproducible from a single seed in
// any language. Used everywhere randomness is needed so generated instances
// are stable across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform over [0, bound); rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound < 2) return 0;
        const std::uint64_t rem = (~bound + 1) % bound; // 2^64 mod bound
        std::uint64_t x = next();
        while (rem != 0 && x >= std::uint64_t{0} - rem) x = next();
        return x % bound;
    }

    // Uniform over [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace wig
