#pragma once

#include <cstdint>
#include <random>

#include "cubeladder/cubic_field.hpp"

namespace cubeladder::testing {

inline std::int64_t random_noncube(std::mt19937_64& rng, std::int64_t hi = 100) {
    std::uniform_int_distribution<std::int64_t> dist(2, hi);
    for (;;) {
        const std::int64_t m = dist(rng);
        if (!is_perfect_cube(BigInt(static_cast<long>(m)))) return m;
    }
}

inline BigInt random_coefficient(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    return BigInt(dist(rng));
}

/// Random element of Q(cbrt m) with small coefficients; may be zero.
inline CubicNumber random_cubic(std::mt19937_64& rng, std::int64_t m, long bound = 1000000) {
    std::uniform_int_distribution<long> den(1, 10000);
    return CubicNumber(m, random_coefficient(rng, bound), random_coefficient(rng, bound),
                       random_coefficient(rng, bound), BigInt(den(rng)));
}

inline CubicNumber random_nonzero_cubic(std::mt19937_64& rng, std::int64_t m, long bound = 1000000) {
    for (;;) {
        CubicNumber x = random_cubic(rng, m, bound);
        if (!x.is_zero()) return x;
    }
}

}  // namespace cubeladder::testing
