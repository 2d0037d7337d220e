// Self-contained deterministic RNG (splitmix64 seeding + xoshiro256**).
//
// std::uniform_int_distribution is implementation-defined, so search results
// would not reproduce across standard libraries. Everything here is fully
// specified: same seed, same sequence, on every platform.
#pragma once

#include <cstdint>

namespace pgarc {

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    // Independent stream for one search attempt. Mixing through splitmix64
    // twice decorrelates nearby (seed, attempt) pairs.
    static Rng for_attempt(uint64_t seed, uint64_t attempt) {
        uint64_t sm = seed;
        uint64_t a = splitmix64_next(sm) ^ (attempt + 0x9e3779b97f4a7c15ULL);
        return Rng(splitmix64_next(a));
    }

    uint64_t next() {
        uint64_t* s = s_;
        uint64_t result = rotl(s[1] * 5, 7) * 9;
        uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Unbiased integer in [0, n). Rejection keeps the result exactly uniform.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace pgarc
