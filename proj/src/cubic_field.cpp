#include "cubeladder/cubic_field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "cubeladder/errors.hpp"

namespace cubeladder {

namespace {

/// floor(cbrt(m) * 2^bits), memoized per thread at the highest precision seen.
///
/// floor(floor(x * 2^K) / 2^(K-k)) = floor(x * 2^k), so any lower precision
/// is a right shift of the cached value.
BigInt scaled_root(std::int64_t m, std::size_t bits) {
    struct Entry {
        std::size_t bits = 0;
        BigInt root;
    };
    thread_local std::unordered_map<std::int64_t, Entry> cache;

    Entry& entry = cache[m];
    if (entry.bits < bits || sgn(entry.root) == 0) {
        // Grow geometrically so repeated refinement does not recompute each step.
        const std::size_t target = std::max(bits, entry.bits + entry.bits / 2);
        const BigInt radicand = shift_left(BigInt(static_cast<long>(m)), 3 * target);
        mpz_root(entry.root.get_mpz_t(), radicand.get_mpz_t(), 3);
        entry.bits = target;
    }
    BigInt out;
    mpz_fdiv_q_2exp(out.get_mpz_t(), entry.root.get_mpz_t(), entry.bits - bits);
    return out;
}

/// Integer bounds lo <= (a + b*t + c*t^2) * 2^(2*bits) <= hi.
struct ScaledBounds {
    BigInt lo;
    BigInt hi;
};

ScaledBounds numerator_bounds(const CubicNumber& x, std::size_t bits) {
    // tau = t * 2^bits lies strictly inside (T, T + 1), and T >= 1.
    const BigInt t_lo = scaled_root(x.m(), bits);
    const BigInt t_hi = t_lo + 1;

    BigInt lin_lo = x.b() * t_lo;
    BigInt lin_hi = x.b() * t_hi;
    if (sgn(x.b()) < 0) std::swap(lin_lo, lin_hi);

    BigInt quad_lo = x.c() * t_lo * t_lo;
    BigInt quad_hi = x.c() * t_hi * t_hi;
    if (sgn(x.c()) < 0) std::swap(quad_lo, quad_hi);

    const BigInt constant = shift_left(x.a(), 2 * bits);
    return {constant + shift_left(lin_lo, bits) + quad_lo,
            constant + shift_left(lin_hi, bits) + quad_hi};
}

BigInt scaled_floor(const BigInt& v, const BigInt& d, std::size_t shift) {
    BigInt out = floor_div(v, d);
    mpz_fdiv_q_2exp(out.get_mpz_t(), out.get_mpz_t(), shift);
    return out;
}

}  // namespace

bool is_perfect_cube(const BigInt& v) {
    BigInt root;
    return mpz_root(root.get_mpz_t(), v.get_mpz_t(), 3) != 0;
}

void require_noncube(std::int64_t m) {
    if (m < 2) {
        throw CubeError("m must be at least 2 (got " + std::to_string(m) + ")");
    }
    if (is_perfect_cube(BigInt(static_cast<long>(m)))) {
        throw CubeError("m must not be a perfect cube (got " + std::to_string(m) + ")");
    }
}

RationalInterval cbrt_bounds(std::int64_t m, std::size_t bits) {
    require_noncube(m);
    if (bits == 0) throw DomainError("cbrt_bounds needs bits >= 1");
    const BigInt root = scaled_root(m, bits);
    const BigInt scale = shift_left(BigInt(1), bits);
    RationalInterval out{BigRational(root, scale), BigRational(root + 1, scale)};
    out.lo.canonicalize();
    out.hi.canonicalize();
    return out;
}

CubicNumber::CubicNumber(std::int64_t m, BigInt a, BigInt b, BigInt c, BigInt d)
    : m_(m), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require_noncube(m_);
    if (sgn(d_) == 0) throw ZeroDenominator("denominator must be nonzero");
    normalize();
}

CubicNumber::CubicNumber(Unchecked, std::int64_t m, BigInt a, BigInt b, BigInt c, BigInt d)
    : m_(m), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
}

CubicNumber CubicNumber::from_integer(std::int64_t m, const BigInt& v) {
    return CubicNumber(m, v, 0, 0, 1);
}

CubicNumber CubicNumber::from_rational(std::int64_t m, const BigRational& v) {
    return CubicNumber(m, v.get_num(), 0, 0, v.get_den());
}

CubicNumber CubicNumber::root(std::int64_t m) { return CubicNumber(m, 0, 1, 0, 1); }

CubicNumber CubicNumber::root_squared(std::int64_t m) { return CubicNumber(m, 0, 0, 1, 1); }

void CubicNumber::normalize() {
    if (is_zero()) {
        d_ = 1;
        return;
    }
    if (sgn(d_) < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
    // d is usually the shortest coefficient, so start there.
    BigInt g = d_;
    for (const BigInt* v : {&a_, &b_, &c_}) {
        if (g == 1) return;
        if (sgn(*v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
    }
    if (g == 1) return;
    for (BigInt* v : {&a_, &b_, &c_, &d_}) {
        mpz_divexact(v->get_mpz_t(), v->get_mpz_t(), g.get_mpz_t());
    }
}

void CubicNumber::require_same_field(const CubicNumber& y) const {
    if (m_ != y.m_) {
        throw MixedField("operands over different fields: m=" + std::to_string(m_) +
                         " and m=" + std::to_string(y.m_));
    }
}

CubicNumber CubicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const BigInt m = static_cast<long>(m_);
    // (a + bt + ct^2)(A + Bt + Ct^2) = N(a, b, c), a rational integer.
    BigInt big_a = a_ * a_ - m * b_ * c_;
    BigInt big_b = m * c_ * c_ - a_ * b_;
    BigInt big_c = b_ * b_ - a_ * c_;
    BigInt norm = a_ * big_a + m * (b_ * big_c + c_ * big_b);
    return CubicNumber(Unchecked{}, m_, d_ * big_a, d_ * big_b, d_ * big_c, std::move(norm));
}

CubicNumber CubicNumber::operator-() const {
    CubicNumber out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    out.c_ = -out.c_;
    return out;
}

CubicNumber& CubicNumber::operator+=(const CubicNumber& y) {
    require_same_field(y);
    if (d_ == y.d_) {
        a_ += y.a_;
        b_ += y.b_;
        c_ += y.c_;
    } else {
        a_ = a_ * y.d_ + y.a_ * d_;
        b_ = b_ * y.d_ + y.b_ * d_;
        c_ = c_ * y.d_ + y.c_ * d_;
        d_ *= y.d_;
    }
    normalize();
    return *this;
}

CubicNumber& CubicNumber::operator-=(const CubicNumber& y) { return *this += -y; }

CubicNumber& CubicNumber::operator*=(const CubicNumber& y) {
    require_same_field(y);
    const BigInt m = static_cast<long>(m_);
    // t^3 = m and t^4 = m*t.
    BigInt r0 = a_ * y.a_ + m * (b_ * y.c_ + c_ * y.b_);
    BigInt r1 = a_ * y.b_ + b_ * y.a_ + m * c_ * y.c_;
    BigInt r2 = a_ * y.c_ + b_ * y.b_ + c_ * y.a_;
    a_ = std::move(r0);
    b_ = std::move(r1);
    c_ = std::move(r2);
    d_ *= y.d_;
    normalize();
    return *this;
}

CubicNumber& CubicNumber::operator/=(const CubicNumber& y) { return *this *= y.inverse(); }

CubicNumber& CubicNumber::operator+=(const BigInt& v) {
    // gcd(a + v*d, b, c, d) = gcd(a, b, c, d): already canonical.
    a_ += v * d_;
    if (is_zero()) d_ = 1;
    return *this;
}

CubicNumber& CubicNumber::operator-=(const BigInt& v) { return *this += BigInt(-v); }

CubicNumber& CubicNumber::operator*=(const BigInt& v) {
    a_ *= v;
    b_ *= v;
    c_ *= v;
    normalize();
    return *this;
}

bool operator==(const CubicNumber& x, const CubicNumber& y) {
    x.require_same_field(y);
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string CubicNumber::to_string() const {
    std::ostringstream os;
    os << '(' << a_ << " + " << b_ << "*t + " << c_ << "*t^2)/" << d_ << " [t^3=" << m_ << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CubicNumber& x) { return os << x.to_string(); }

int sign(const CubicNumber& x) {
    if (x.is_rational()) return sgn(x.a());
    // Irrational, hence nonzero: refinement terminates.
    for (std::size_t bits = 32;; bits *= 2) {
        const ScaledBounds v = numerator_bounds(x, bits);
        if (sgn(v.lo) > 0) return 1;
        if (sgn(v.hi) < 0) return -1;
    }
}

int compare(const CubicNumber& x, const CubicNumber& y) { return sign(x - y); }

CubicNumber abs(const CubicNumber& x) { return sign(x) < 0 ? -x : x; }

BigInt floor(const CubicNumber& x) {
    if (x.is_rational()) return floor_div(x.a(), x.d());

    // 64 bits beyond the scale at which t-uncertainty reaches the integer grid.
    const std::size_t coeff_bits = std::max(bit_length(x.b()), bit_length(x.c()));
    const std::size_t den_bits = bit_length(x.d());
    const std::size_t bits = 64 + (coeff_bits > den_bits ? coeff_bits - den_bits : 0);

    const ScaledBounds v = numerator_bounds(x, bits);
    BigInt f = scaled_floor(v.lo, x.d(), 2 * bits);
    const BigInt f_hi = scaled_floor(v.hi, x.d(), 2 * bits);
    if (f == f_hi) return f;

    // Enclosure straddles an integer; settle it with exact sign tests.
    while (f < f_hi && sign(x - BigInt(f + 1)) >= 0) ++f;
    return f;
}

RationalInterval enclose(const CubicNumber& x, std::size_t bits) {
    if (x.is_rational()) {
        BigRational v(x.a(), x.d());
        v.canonicalize();
        return {v, v};
    }
    const ScaledBounds v = numerator_bounds(x, bits);
    const BigInt den = shift_left(x.d(), 2 * bits);
    RationalInterval out{BigRational(v.lo, den), BigRational(v.hi, den)};
    out.lo.canonicalize();
    out.hi.canonicalize();
    return out;
}

bool lemma_zveza_check(const BigInt& p, const BigInt& q, std::int64_t m) {
    if (sgn(p) <= 0 || sgn(q) <= 0) throw DomainError("lemma_zveza_check needs p, q >= 1");
    const CubicNumber t = CubicNumber::root(m);
    const CubicNumber t2 = CubicNumber::root_squared(m);
    const CubicNumber q_over_p = CubicNumber::from_rational(m, BigRational(q, p));
    const CubicNumber p_over_q = CubicNumber::from_rational(m, BigRational(p, q));
    const BigInt mm = static_cast<long>(m);

    const CubicNumber left = CubicNumber::from_rational(m, BigRational(mm * q, p)) - t2;
    const CubicNumber error = p_over_q - t;

    const bool first = left == -(q_over_p * t2 * error);
    const bool second = left * BigInt(p * p) == -(p_over_q * t2 * error * BigInt(q * q));
    return first && second;
}

}  // namespace cubeladder
