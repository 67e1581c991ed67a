#include <doctest.h>

#include <vector>

#include "cubeladder/cf_engine.hpp"
#include "cubeladder/errors.hpp"
#include "cubeladder/oracle.hpp"

using namespace cubeladder;

namespace {

std::vector<long> quotients(const Expansion& exp) {
    std::vector<long> out;
    for (const Triplet& tr : exp.triplets()) out.push_back(tr.b.get_si());
    return out;
}

}  // namespace

TEST_CASE("surd validation") {
    CHECK_THROWS_AS(Surd(8, 1), CubeError);
    CHECK_THROWS_AS(Surd(2, 3), DomainError);
    CHECK(Surd(6, 2).value() == CubicNumber::root_squared(6));
}

TEST_CASE("partial quotients of cbrt 2 and cbrt 4") {
    CHECK(quotients(expand(Surd(2, 1), 11)) == std::vector<long>{1, 3, 1, 5, 1, 1, 4, 1, 1, 8, 1, 14});
    CHECK(quotients(expand(Surd(2, 2), 5)) == std::vector<long>{1, 1, 1, 2, 2, 1});
    CHECK(quotients(expand(Surd(6, 1), 11)) == std::vector<long>{1, 1, 4, 2, 7, 3, 508, 1, 5, 5, 1, 1});
    CHECK(quotients(expand(Surd(6, 2), 11)) == std::vector<long>{3, 3, 3, 4, 1, 7, 1, 83, 1, 36, 15, 3});
    CHECK(quotients(expand(Surd(5, 1), 0)) == std::vector<long>{1});
}

TEST_CASE("convergents carried by the triplets") {
    const Expansion exp = expand(Surd(2, 1), 4);
    const long expected[][2] = {{1, 0}, {1, 1}, {4, 3}, {5, 4}, {29, 23}};
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(exp.triplet(n).n == n);
        CHECK(exp.triplet(n).p_prev == expected[n][0]);
        CHECK(exp.triplet(n).q_prev == expected[n][1]);
    }
    CHECK(exp.p(4) == 34);  // 1*29 + 5
    CHECK(exp.q(4) == 27);
    CHECK(exp.p(-1) == 1);
    CHECK(exp.q(-1) == 0);
    CHECK_THROWS_AS(exp.p(5), IndexOutOfRange);
    CHECK_THROWS_AS(exp.triplet(5), IndexOutOfRange);
}

TEST_CASE("streaming quotients match the stored expansion") {
    const Expansion exp = expand(Surd(3, 2), 60);
    QuotientStream stream(Surd(3, 2));
    for (std::size_t n = 0; n <= 60; ++n) {
        CHECK(stream.index() == n);
        CHECK(stream.next() == exp.b(n));
    }
}

TEST_CASE("complete quotient identity") {
    CHECK(complete_quotient_identity(expand(Surd(2, 1), 5), 2));
    CHECK(complete_quotient_identity(expand(Surd(6, 1), 10), 10));
    const Expansion exp = expand(Surd(2, 1), 5);
    CHECK_THROWS_AS(complete_quotient_identity(exp, 1), IndexOutOfRange);
    CHECK_THROWS_AS(complete_quotient_identity(exp, 6), IndexOutOfRange);
}

TEST_CASE("determinant identity") {
    const Expansion exp = expand(Surd(2, 1), 5);
    CHECK(determinant_identity(exp, 0));
    CHECK(determinant_identity(exp, 2));  // 5*3 - 4*4 = -1
    CHECK(determinant_identity(exp, 3));  // 29*4 - 5*23 = 1
    CHECK_THROWS_AS(determinant_identity(exp, 6), IndexOutOfRange);
}

TEST_CASE("delta and its predicates") {
    const Surd cbrt2(2, 1);
    CHECK(is_convergent_sufficient(5, 4, cbrt2));
    CHECK_FALSE(is_convergent_sufficient(3, 2, cbrt2));
    CHECK(delta_bounds_check(4, 3, cbrt2, 1));
    CHECK_FALSE(delta_bounds_check(4, 3, cbrt2, 5));
    // delta = (p/q - xi) q^2 = (p - q xi) q
    CHECK(delta(3, 2, cbrt2) == CubicNumber(2, 6, -4, 0));
    CHECK(sign(delta(5, 4, cbrt2)) < 0);
    CHECK_THROWS_AS(delta(4, 2, cbrt2), DomainError);
    CHECK_THROWS_AS(delta(4, 0, cbrt2), DomainError);
}

TEST_CASE("sandwich, relative errors and ordering") {
    CHECK(sandwich_check(expand(Surd(2, 1), 20)));
    CHECK(sandwich_check(expand(Surd(6, 2), 20)));
    CHECK(sandwich_check(expand(Surd(2, 1), 1)));
    CHECK(relative_error_decreasing(expand(Surd(2, 1), 15)));
    CHECK(relative_error_decreasing(expand(Surd(10, 1), 15)));
    CHECK(relative_error_decreasing(expand(Surd(3, 2), 15)));
    CHECK_FALSE(ordering_failure(expand(Surd(7, 1), 30)));
}

TEST_CASE("identity suite holds for small m, both powers, N = 200") {
    for (std::int64_t m : {2, 3, 4, 5, 6, 7, 9, 10}) {
        for (int power : {1, 2}) {
            CAPTURE(m);
            CAPTURE(power);
            const Expansion exp = expand(Surd(m, power), 200);
            for (std::size_t n = 0; n <= 200; ++n) {
                const Triplet& tr = exp.triplet(n);
                if (n >= 1) {
                    REQUIRE(sign(tr.xi - BigInt(1)) > 0);
                    REQUIRE(tr.b >= 1);
                }
                REQUIRE(determinant_identity(exp, n));
                if (n >= 2) REQUIRE(complete_quotient_identity(exp, n));
                if (n < 200) {
                    const long i = static_cast<long>(n);
                    REQUIRE(delta_bounds_check(exp.p(i), exp.q(i), exp.surd(), exp.b(n + 1)));
                }
            }
            CHECK(sandwich_check(exp));
            CHECK(relative_error_decreasing(exp));
            CHECK_FALSE(ordering_failure(exp));
        }
    }
}

TEST_CASE("agreement with the interval oracle, N = 1000") {
    for (std::int64_t m : {2, 3, 6}) {
        for (int power : {1, 2}) {
            CAPTURE(m);
            CAPTURE(power);
            const Expansion exp = expand(Surd(m, power), 1000);
            const auto reference = oracle::oracle_expand(m, power, 1000);
            REQUIRE(reference.size() == 1001);
            for (std::size_t n = 0; n <= 1000; ++n) REQUIRE(reference[n] == exp.b(n));
        }
    }
}
