#pragma once

#include <cstdint>

namespace csep {

// splitmix64: portable, deterministic across platforms (std distributions
// are not specified bit-for-bit).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1; rejection sampling for no bias
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + int(below(std::uint64_t(hi - lo + 1)));
    }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }
};

}  // namespace csep
