#pragma once

#include <cstdint>
#include <random>

namespace spectral {

// splitmix64 finalizer; decorrelates consecutive (seed, stream) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random stream addressed by (seed, stream id). Distinct stream
// ids on the same seed give independent sequences, so parallel workers can
// draw without sharing state and results stay identical across thread counts.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix64(mix64(seed) ^ mix64(stream))) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n). Masked rejection keeps the draw unbiased and
    // the consumed word count platform-independent given the same sequence.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0};
        mask >>= 63 - bit_width_minus_one(n - 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < n) return v;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    static int bit_width_minus_one(std::uint64_t v) {
        int b = 0;
        while (v >>= 1) ++b;
        return b;
    }

    std::mt19937_64 engine_;
};

} // namespace spectral
