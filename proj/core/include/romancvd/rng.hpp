#pragma once

#include <cstdint>

namespace romancvd {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because it is trivially
// splittable and its output sequence is pinned by the seed alone, so every
// generated corpus is reproducible from (params, seed) across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via 128-bit multiply-shift; bound must be > 0.
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<__uint128_t>(next()) * static_cast<__uint128_t>(bound)) >> 64);
    }

    // True with probability p, using the top 53 bits of one draw.
    bool next_bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return (next() >> 11) < static_cast<uint64_t>(p * 9007199254740992.0);
    }

    // Independent child stream; advances this stream by one draw.
    SplitMix64 split() { return SplitMix64(next()); }

private:
    uint64_t state_;
};

}  // namespace romancvd
