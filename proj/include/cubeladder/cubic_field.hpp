#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubeladder/bigint.hpp"

namespace cubeladder {

bool is_perfect_cube(const BigInt& v);

/// Throws CubeError unless m >= 2 and m is not a perfect cube.
void require_noncube(std::int64_t m);

/// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
    BigRational lo;
    BigRational hi;

    BigRational width() const { return hi - lo; }
    bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
};

/// Certified enclosure of cbrt(m): lo^3 < m < hi^3 and hi - lo <= 2^-bits.
///
/// The enclosure at a given precision is floor(cbrt(m) * 2^bits) / 2^bits
/// widened by one ulp, so enclosures for increasing `bits` are nested.
RationalInterval cbrt_bounds(std::int64_t m, std::size_t bits);

/// An element (a + b*t + c*t^2) / d of Q(t), t = cbrt(m).
///
/// Always stored canonically: d > 0 and gcd(a, b, c, d) = 1. Because
/// {1, t, t^2} is a basis over Q for noncube m, two values over the same m
/// are equal exactly when their coefficient tuples are.
class CubicNumber {
public:
    /// Validates m and d, then normalizes. Throws CubeError or ZeroDenominator.
    CubicNumber(std::int64_t m, BigInt a, BigInt b, BigInt c, BigInt d = 1);

    static CubicNumber from_integer(std::int64_t m, const BigInt& v);
    static CubicNumber from_rational(std::int64_t m, const BigRational& v);
    /// t = cbrt(m).
    static CubicNumber root(std::int64_t m);
    /// t^2 = cbrt(m^2).
    static CubicNumber root_squared(std::int64_t m);

    std::int64_t m() const { return m_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0; }
    bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0; }

    /// Multiplicative inverse via the cubic norm. Throws DivisionByZero.
    CubicNumber inverse() const;

    CubicNumber operator-() const;
    CubicNumber& operator+=(const CubicNumber& y);
    CubicNumber& operator-=(const CubicNumber& y);
    CubicNumber& operator*=(const CubicNumber& y);
    CubicNumber& operator/=(const CubicNumber& y);
    CubicNumber& operator+=(const BigInt& v);
    CubicNumber& operator-=(const BigInt& v);
    CubicNumber& operator*=(const BigInt& v);

    friend CubicNumber operator+(CubicNumber x, const CubicNumber& y) { return x += y; }
    friend CubicNumber operator-(CubicNumber x, const CubicNumber& y) { return x -= y; }
    friend CubicNumber operator*(CubicNumber x, const CubicNumber& y) { return x *= y; }
    friend CubicNumber operator/(CubicNumber x, const CubicNumber& y) { return x /= y; }
    friend CubicNumber operator+(CubicNumber x, const BigInt& v) { return x += v; }
    friend CubicNumber operator-(CubicNumber x, const BigInt& v) { return x -= v; }
    friend CubicNumber operator*(CubicNumber x, const BigInt& v) { return x *= v; }
    friend CubicNumber operator*(const BigInt& v, CubicNumber x) { return x *= v; }

    friend bool operator==(const CubicNumber& x, const CubicNumber& y);

    std::string to_string() const;

private:
    struct Unchecked {};
    CubicNumber(Unchecked, std::int64_t m, BigInt a, BigInt b, BigInt c, BigInt d);

    void normalize();
    void require_same_field(const CubicNumber& y) const;

    std::int64_t m_;
    BigInt a_;
    BigInt b_;
    BigInt c_;
    BigInt d_;
};

std::ostream& operator<<(std::ostream& os, const CubicNumber& x);

inline CubicNumber make(std::int64_t m, BigInt a, BigInt b, BigInt c, BigInt d) {
    return CubicNumber(m, std::move(a), std::move(b), std::move(c), std::move(d));
}
inline CubicNumber add(const CubicNumber& x, const CubicNumber& y) { return x + y; }
inline CubicNumber sub(const CubicNumber& x, const CubicNumber& y) { return x - y; }
inline CubicNumber neg(const CubicNumber& x) { return -x; }
inline CubicNumber mul(const CubicNumber& x, const CubicNumber& y) { return x * y; }
inline CubicNumber invert(const CubicNumber& x) { return x.inverse(); }

/// Exact sign of x in {-1, 0, +1}.
int sign(const CubicNumber& x);

/// Sign of x - y. Throws MixedField.
int compare(const CubicNumber& x, const CubicNumber& y);

CubicNumber abs(const CubicNumber& x);

/// The unique integer f with f <= x < f + 1.
BigInt floor(const CubicNumber& x);

/// Rational interval containing x, obtained from a t-enclosure of width 2^-bits.
RationalInterval enclose(const CubicNumber& x, std::size_t bits);

/// Evaluates both field identities relating m*q/p - t^2 to p/q - t exactly.
bool lemma_zveza_check(const BigInt& p, const BigInt& q, std::int64_t m);

}  // namespace cubeladder
