#pragma once

#include <cstdint>

namespace mfq {

// SplitMix64. Fixed algorithm so every sampled result is reproducible
// bit-for-bit from the seed, independent of platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n >= 1.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t limit = ~0ull - (~0ull % n);
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

private:
    uint64_t state_;
};

} // namespace mfq
