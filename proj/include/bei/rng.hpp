#pragma once

#include <cstdint>

namespace bei {

// SplitMix64. Fixed algorithm so that seeded corpora are reproducible across
// platforms and releases; do not swap for std:: distributions (their output
// is not pinned by the standard).
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n). Modulo bias is irrelevant at the sizes we
    // draw; what matters is that the mapping is fixed.
    uint64_t bounded(uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Inclusive range.
    int range(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }
};

}  // namespace bei
