// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "monocheck/rational.hpp"

namespace monocheck {

// splitmix64. Self-contained so that seeded generation is bit-identical
// across standard libraries and platforms.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    long range(long lo, long hi) {  // inclusive ends
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Random rational k/den with k in [lo*den, hi*den].
    Rational rational(long lo, long hi, long den) {
        return rat(range(lo * den, hi * den), den);
    }

    bool coin() { return (next() & 1) != 0; }

   private:
    std::uint64_t state_;
};

}  // namespace monocheck
