#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubeladder/bigint.hpp"
#include "cubeladder/cubic_field.hpp"

namespace cubeladder::oracle {

/// floor(cbrt(v)) for v >= 0 by integer Newton iteration.
BigInt integer_cbrt(const BigInt& v);

/// Enclosure of cbrt(m^power) of width 2^-bits with lo^3 < m^power < hi^3,
/// computed independently of the cubic-field code.
RationalInterval root_enclosure(std::int64_t m, int power, std::size_t bits);

struct IntervalState {
    RationalInterval enclosure;
    std::size_t bits = 0;
    std::size_t steps_certified = 0;
};

/// Partial quotients b_0..b_N of cbrt(m^power) from rational interval
/// arithmetic alone. A quotient is emitted only when floor(lo) == floor(hi);
/// on ambiguity the whole run restarts from a root enclosure of twice the
/// precision. Throws CubeError for invalid m.
std::vector<BigInt> oracle_expand(std::int64_t m, int power, std::size_t length,
                                  std::size_t initial_bits = 64);

}  // namespace cubeladder::oracle
