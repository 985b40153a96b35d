#pragma once

#include "hombracket/rational.hpp"

#include <cstdint>

namespace hombracket {

/// Deterministic splitmix64 stream. Bounded draws go through plain modulo so
/// that a report's recorded seed reproduces the run on any platform; the
/// slight bias is irrelevant here.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    int next_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational next_rational(int max_abs_num = 3, int max_den = 2) {
        return Rational(next_int(-max_abs_num, max_abs_num), next_int(1, max_den));
    }
};

} // namespace hombracket
