#pragma once

#include <array>
#include <cmath>
#include <cstdint>

// Pinned, portable random machinery. Every seeded result in this project
// (bootstrap resamples, random splits, synthetic fixtures) flows through
// these generators so that a seed means the same byte-for-byte output on
// every platform. Algorithms: splitmix64 for seed expansion and stream
// derivation, xoshiro256** for bulk generation, modulo rejection for
// unbiased bounded draws.

namespace envbench {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : state_) w = sm.next();
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased draw from {0, ..., n-1} via modulo rejection
    // (accepts only the top multiple-of-n slice of the 64-bit range).
    uint64_t below(uint64_t n) {
        const uint64_t min = (0 - n) % n;
        uint64_t x;
        do {
            x = next();
        } while (x < min);
        return x % n;
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller on pinned uniform draws.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace envbench
