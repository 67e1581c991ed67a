#include "cubeladder/oracle.hpp"

#include <optional>
#include <string>

#include "cubeladder/errors.hpp"

namespace cubeladder::oracle {

namespace {

/// Runs the interval expansion at a fixed precision; nullopt on ambiguity.
std::optional<std::vector<BigInt>> expand_at(std::int64_t m, int power, std::size_t length,
                                             std::size_t bits) {
    IntervalState state{root_enclosure(m, power, bits), bits, 0};
    std::vector<BigInt> out;
    out.reserve(length + 1);
    for (;;) {
        const BigInt b = floor_of(state.enclosure.lo);
        if (floor_of(state.enclosure.hi) != b) return std::nullopt;
        // lo == b would leave the next complete quotient unbounded above.
        if (state.enclosure.lo == BigRational(b)) return std::nullopt;

        out.push_back(b);
        ++state.steps_certified;
        if (out.size() == length + 1) return out;

        // x -> 1/(x - b) is decreasing on (b, b + 1): endpoints swap.
        BigRational lo = 1 / (state.enclosure.hi - b);
        BigRational hi = 1 / (state.enclosure.lo - b);
        state.enclosure = {std::move(lo), std::move(hi)};
    }
}

}  // namespace

BigInt integer_cbrt(const BigInt& v) {
    if (sgn(v) < 0) throw DomainError("integer_cbrt of a negative value");
    if (v < 8) return v == 0 ? BigInt(0) : BigInt(1);
    // Start above the root; Newton then decreases monotonically to floor(cbrt v).
    BigInt x = shift_left(BigInt(1), (bit_length(v) + 2) / 3);
    for (;;) {
        const BigInt y = (2 * x + v / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > v) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= v) ++x;
    return x;
}

RationalInterval root_enclosure(std::int64_t m, int power, std::size_t bits) {
    require_noncube(m);
    if (power != 1 && power != 2) throw DomainError("power must be 1 or 2");
    const BigInt target = power == 1 ? BigInt(static_cast<long>(m))
                                     : BigInt(static_cast<long>(m)) * static_cast<long>(m);
    const BigInt root = integer_cbrt(shift_left(target, 3 * bits));
    const BigInt scale = shift_left(BigInt(1), bits);
    RationalInterval out{BigRational(root, scale), BigRational(root + 1, scale)};
    out.lo.canonicalize();
    out.hi.canonicalize();

    const BigRational cube_lo = out.lo * out.lo * out.lo;
    const BigRational cube_hi = out.hi * out.hi * out.hi;
    if (!(cube_lo < target && target < cube_hi)) {
        throw Error("internal: root enclosure failed certification");
    }
    return out;
}

std::vector<BigInt> oracle_expand(std::int64_t m, int power, std::size_t length,
                                  std::size_t initial_bits) {
    require_noncube(m);
    for (std::size_t bits = initial_bits < 8 ? 8 : initial_bits;; bits *= 2) {
        if (auto quotients = expand_at(m, power, length, bits)) return std::move(*quotients);
    }
}

}  // namespace cubeladder::oracle
