#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeladder/bigint.hpp"
#include "cubeladder/cubic_field.hpp"

namespace cubeladder {

/// cbrt(m) (power 1) or cbrt(m^2) (power 2) for noncube m.
class Surd {
public:
    /// Throws CubeError for invalid m and DomainError for a power outside {1, 2}.
    Surd(std::int64_t m, int power);

    std::int64_t m() const { return m_; }
    int power() const { return power_; }

    /// The surd as an element of Q(cbrt m): t or t^2.
    CubicNumber value() const;

    friend bool operator==(const Surd&, const Surd&) = default;

private:
    std::int64_t m_;
    int power_;
};

/// One rung of one side of a ladder: (p_{n-1}/q_{n-1}, xi_n, b_n).
///
/// Triplet 0 carries the formal convergent p_{-1}/q_{-1} = 1/0.
struct Triplet {
    std::size_t n = 0;
    BigInt p_prev;
    BigInt q_prev;
    CubicNumber xi;
    BigInt b;
};

/// Continued-fraction expansion of a surd up to triplet index N.
class Expansion {
public:
    const Surd& surd() const { return surd_; }
    /// N, the last stored triplet index.
    std::size_t length() const { return triplets_.size() - 1; }
    const std::vector<Triplet>& triplets() const { return triplets_; }
    const Triplet& triplet(std::size_t n) const;
    const BigInt& b(std::size_t n) const { return triplet(n).b; }

    /// Convergent numerator p_i for -1 <= i <= N.
    const BigInt& p(long i) const;
    /// Convergent denominator q_i for -1 <= i <= N.
    const BigInt& q(long i) const;

private:
    friend Expansion expand(const Surd& surd, std::size_t length);

    explicit Expansion(Surd surd) : surd_(surd) {}

    Surd surd_;
    std::vector<Triplet> triplets_;
    BigInt p_last_;
    BigInt q_last_;
};

/// Exact expansion xi_0 = surd, b_n = floor(xi_n), xi_{n+1} = 1/(xi_n - b_n).
Expansion expand(const Surd& surd, std::size_t length);

/// Streams partial quotients b_0, b_1, ... without retaining complete quotients.
class QuotientStream {
public:
    explicit QuotientStream(const Surd& surd);

    /// Index of the quotient the next call to next() returns.
    std::size_t index() const { return index_; }
    BigInt next();

private:
    CubicNumber current_;
    std::size_t index_ = 0;
};

/// xi_n = -(p_{n-2} - q_{n-2} xi) / (p_{n-1} - q_{n-1} xi), for 2 <= n <= N.
bool complete_quotient_identity(const Expansion& exp, std::size_t n);

/// p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1), for 0 <= n <= N.
bool determinant_identity(const Expansion& exp, std::size_t n);

/// delta = (p/q - xi) q^2. Requires q >= 1 and gcd(p, q) = 1.
CubicNumber delta(const BigInt& p, const BigInt& q, const Surd& surd);

/// |delta| < 1/2, which suffices for p/q to be a convergent.
bool is_convergent_sufficient(const BigInt& p, const BigInt& q, const Surd& surd);

/// 1/(b+2) < |delta| < 1/b, for a convergent followed by partial quotient b.
bool delta_bounds_check(const BigInt& p, const BigInt& q, const Surd& surd, const BigInt& next_b);

/// First convergent index breaking p_{2j}/q_{2j} < xi < p_{2j+1}/q_{2j+1}.
std::optional<std::size_t> sandwich_failure(const Expansion& exp);
bool sandwich_check(const Expansion& exp);

/// First n for which |1 - xi/(p_n/q_n)| <= |1 - xi/(p_{n+1}/q_{n+1})|.
std::optional<std::size_t> relative_error_failure(const Expansion& exp);
bool relative_error_decreasing(const Expansion& exp);

/// Convergent ordering: p_n increasing (n >= 0), q_n increasing (n >= 1), and
/// |p_n/q_n - xi| decreasing. Returns the first offending index.
std::optional<std::size_t> ordering_failure(const Expansion& exp);

}  // namespace cubeladder
