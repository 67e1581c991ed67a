#include "cubeladder/cf_engine.hpp"

#include <string>

#include "cubeladder/errors.hpp"

namespace cubeladder {

namespace {

CubicNumber approximation_error(const BigInt& p, const BigInt& q, const CubicNumber& xi) {
    // p - q*xi
    return -(xi * q) + p;
}

}  // namespace

Surd::Surd(std::int64_t m, int power) : m_(m), power_(power) {
    require_noncube(m);
    if (power != 1 && power != 2) {
        throw DomainError("power must be 1 or 2 (got " + std::to_string(power) + ")");
    }
}

CubicNumber Surd::value() const {
    return power_ == 1 ? CubicNumber::root(m_) : CubicNumber::root_squared(m_);
}

const Triplet& Expansion::triplet(std::size_t n) const {
    if (n >= triplets_.size()) {
        throw IndexOutOfRange("triplet index " + std::to_string(n) + " beyond length " +
                              std::to_string(length()));
    }
    return triplets_[n];
}

const BigInt& Expansion::p(long i) const {
    if (i < -1 || i > static_cast<long>(length())) {
        throw IndexOutOfRange("convergent index " + std::to_string(i));
    }
    return i == static_cast<long>(length()) ? p_last_ : triplets_[i + 1].p_prev;
}

const BigInt& Expansion::q(long i) const {
    if (i < -1 || i > static_cast<long>(length())) {
        throw IndexOutOfRange("convergent index " + std::to_string(i));
    }
    return i == static_cast<long>(length()) ? q_last_ : triplets_[i + 1].q_prev;
}

Expansion expand(const Surd& surd, std::size_t length) {
    Expansion out(surd);
    out.triplets_.reserve(length + 1);

    // (p_{n-2}, q_{n-2}) and (p_{n-1}, q_{n-1}), seeded with the formal
    // indices -2 and -1 so that p_0 = b_0, q_0 = 1.
    BigInt p_before = 0, q_before = 1;
    BigInt p_prev = 1, q_prev = 0;
    CubicNumber xi = surd.value();

    for (std::size_t n = 0;; ++n) {
        BigInt b = floor(xi);
        BigInt p_n = b * p_prev + p_before;
        BigInt q_n = b * q_prev + q_before;

        CubicNumber next = xi - b;
        out.triplets_.push_back(Triplet{n, p_prev, q_prev, std::move(xi), b});

        p_before = std::move(p_prev);
        q_before = std::move(q_prev);
        p_prev = std::move(p_n);
        q_prev = std::move(q_n);

        if (n == length) break;
        if (next.is_zero()) throw Error("internal: expansion of an irrational terminated");
        xi = invert(next);
    }
    out.p_last_ = std::move(p_prev);
    out.q_last_ = std::move(q_prev);
    return out;
}

QuotientStream::QuotientStream(const Surd& surd) : current_(surd.value()) {}

BigInt QuotientStream::next() {
    BigInt b = floor(current_);
    current_ -= b;
    if (current_.is_zero()) throw Error("internal: expansion of an irrational terminated");
    current_ = invert(current_);
    ++index_;
    return b;
}

bool complete_quotient_identity(const Expansion& exp, std::size_t n) {
    if (n < 2 || n > exp.length()) {
        throw IndexOutOfRange("complete quotient identity needs 2 <= n <= N (n=" +
                              std::to_string(n) + ")");
    }
    const CubicNumber xi = exp.surd().value();
    const long i = static_cast<long>(n);
    const CubicNumber num = approximation_error(exp.p(i - 2), exp.q(i - 2), xi);
    const CubicNumber den = approximation_error(exp.p(i - 1), exp.q(i - 1), xi);
    return exp.triplet(n).xi == -(num / den);
}

bool determinant_identity(const Expansion& exp, std::size_t n) {
    if (n > exp.length()) {
        throw IndexOutOfRange("determinant identity needs n <= N (n=" + std::to_string(n) + ")");
    }
    const long i = static_cast<long>(n);
    const BigInt det = exp.p(i) * exp.q(i - 1) - exp.p(i - 1) * exp.q(i);
    // (-1)^(n-1): -1 for even n, +1 for odd n.
    return det == (n % 2 == 0 ? -1 : 1);
}

CubicNumber delta(const BigInt& p, const BigInt& q, const Surd& surd) {
    if (sgn(q) <= 0) throw DomainError("delta needs q >= 1");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw DomainError("delta needs p/q in lowest terms");
    return approximation_error(p, q, surd.value()) * q;
}

bool is_convergent_sufficient(const BigInt& p, const BigInt& q, const Surd& surd) {
    const CubicNumber d = abs(delta(p, q, surd));
    return sign(d * BigInt(2) - BigInt(1)) < 0;
}

bool delta_bounds_check(const BigInt& p, const BigInt& q, const Surd& surd, const BigInt& next_b) {
    if (sgn(next_b) <= 0) throw DomainError("delta bounds need a partial quotient >= 1");
    const CubicNumber d = abs(delta(p, q, surd));
    return sign(d * BigInt(next_b + 2) - BigInt(1)) > 0 && sign(d * next_b - BigInt(1)) < 0;
}

std::optional<std::size_t> sandwich_failure(const Expansion& exp) {
    const CubicNumber xi = exp.surd().value();
    for (std::size_t i = 0; i <= exp.length(); ++i) {
        const long idx = static_cast<long>(i);
        // p/q < xi  <=>  p - q*xi < 0
        const int s = sign(approximation_error(exp.p(idx), exp.q(idx), xi));
        if (s != (i % 2 == 0 ? -1 : 1)) return i;
    }
    return std::nullopt;
}

bool sandwich_check(const Expansion& exp) { return !sandwich_failure(exp); }

std::optional<std::size_t> relative_error_failure(const Expansion& exp) {
    const CubicNumber xi = exp.surd().value();
    // |1 - xi/(p/q)| = |p - q xi| / p with p > 0.
    CubicNumber prev = abs(approximation_error(exp.p(0), exp.q(0), xi));
    for (std::size_t i = 1; i <= exp.length(); ++i) {
        const long idx = static_cast<long>(i);
        CubicNumber cur = abs(approximation_error(exp.p(idx), exp.q(idx), xi));
        if (sign(prev * exp.p(idx) - cur * exp.p(idx - 1)) <= 0) return i - 1;
        prev = std::move(cur);
    }
    return std::nullopt;
}

bool relative_error_decreasing(const Expansion& exp) { return !relative_error_failure(exp); }

std::optional<std::size_t> ordering_failure(const Expansion& exp) {
    const CubicNumber xi = exp.surd().value();
    CubicNumber prev = abs(approximation_error(exp.p(0), exp.q(0), xi));
    for (std::size_t i = 1; i <= exp.length(); ++i) {
        const long idx = static_cast<long>(i);
        if (exp.p(idx) <= exp.p(idx - 1)) return i;
        if (i >= 2 && exp.q(idx) <= exp.q(idx - 1)) return i;
        // |p_{i-1}/q_{i-1} - xi| > |p_i/q_i - xi|, cross-multiplied by q_{i-1} q_i.
        CubicNumber cur = abs(approximation_error(exp.p(idx), exp.q(idx), xi));
        if (sign(prev * exp.q(idx) - cur * exp.q(idx - 1)) <= 0) return i;
        prev = std::move(cur);
    }
    return std::nullopt;
}

}  // namespace cubeladder
