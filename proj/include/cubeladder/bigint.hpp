#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>

namespace cubeladder {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Number of significant bits of |v|; zero for v == 0.
inline std::size_t bit_length(const BigInt& v) {
    return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline BigInt floor_of(const BigRational& v) {
    return floor_div(v.get_num(), v.get_den());
}

inline BigInt shift_left(const BigInt& v, std::size_t bits) {
    BigInt out;
    mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), bits);
    return out;
}

inline BigInt pow_ui(const BigInt& v, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), v.get_mpz_t(), e);
    return out;
}

struct BigIntHash {
    std::size_t operator()(const BigInt& v) const noexcept {
        const mpz_srcptr z = v.get_mpz_t();
        std::size_t h = static_cast<std::size_t>(mpz_size(z));
        if (mpz_size(z) > 0) {
            h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return sgn(v) < 0 ? ~h : h;
    }
};

}  // namespace cubeladder
