#include <doctest.h>

#include <cmath>
#include <vector>

#include "cubeladder/cf_engine.hpp"
#include "cubeladder/errors.hpp"
#include "cubeladder/stats.hpp"

using namespace cubeladder;

TEST_CASE("Kuzmin probabilities") {
    CHECK(kuzmin_expected(1) == doctest::Approx(0.41503749927884376).epsilon(1e-14));
    CHECK(kuzmin_expected(2) == doctest::Approx(0.16992500144231237).epsilon(1e-14));
    CHECK_THROWS_AS(kuzmin_expected(0), DomainError);

    double sum = 0.0;
    double prev = 1.0;
    for (std::int64_t k = 1; k <= 1000000; ++k) {
        const double p = kuzmin_expected(k);
        REQUIRE(p > 0.0);
        REQUIRE(p < prev);
        prev = p;
        sum += p;
        if (k == 10 || k == 100 || k == 1000000) {
            CHECK(sum < 1.0);
            CHECK(sum + kuzmin_tail(k) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    CHECK(sum > 0.9999);
}

TEST_CASE("histogram counting") {
    const std::vector<BigInt> stream{3, 1, 5, 1, 1, 4};
    const QuotientHistogram h = histogram(stream, 5);
    CHECK(h.total == 6);
    CHECK(h.tail == 0);
    CHECK(h.count(1) == 3);
    CHECK(h.count(3) == 1);
    CHECK(h.count(4) == 1);
    CHECK(h.count(5) == 1);
    CHECK(h.count(2) == 0);

    const QuotientHistogram empty = histogram(std::vector<BigInt>{}, 5);
    CHECK(empty.total == 0);
    CHECK(empty.counts.empty());
    CHECK_THROWS_AS(kuzmin_distance(empty), EmptyHistogram);

    CHECK_THROWS_AS(histogram(std::vector<BigInt>{0}, 5), DomainError);
}

TEST_CASE("histogram of the first cbrt 2 quotients") {
    const Expansion exp = expand(Surd(2, 1), 12);
    std::vector<BigInt> bs;
    for (std::size_t n = 1; n <= 12; ++n) bs.push_back(exp.b(n));
    const QuotientHistogram h = histogram(bs, 100);
    CHECK(h.total == 12);
    CHECK(h.count(1) == 7);
    CHECK(h.count(3) == 1);
    CHECK(h.count(4) == 1);
    CHECK(h.count(5) == 1);
    CHECK(h.count(8) == 1);
    CHECK(h.count(14) == 1);
}

TEST_CASE("tail bucket and merge") {
    QuotientHistogram a;
    a.cutoff = 3;
    for (long b : {1, 2, 7, 100}) a.add(b);
    QuotientHistogram b;
    b.cutoff = 3;
    for (long v : {3, 1}) b.add(v);

    QuotientHistogram ab = a;
    ab.merge(b);
    QuotientHistogram ba = b;
    ba.merge(a);
    CHECK(ab.total == 6);
    CHECK(ab.tail == 2);
    CHECK(ab.counts == ba.counts);
    std::uint64_t sum = ab.tail;
    for (const auto& [k, c] : ab.counts) sum += c;
    CHECK(sum == ab.total);

    QuotientHistogram other;
    other.cutoff = 4;
    CHECK_THROWS_AS(a.merge(other), DomainError);
}

TEST_CASE("Kuzmin distance") {
    QuotientHistogram single;
    single.add(1);
    const KuzminComparison one = kuzmin_distance(single);
    CHECK(one.rows[0].deviation == doctest::Approx(1.0 - 0.41503749927884376));

    // Counts proportional to the law at a huge sample size.
    QuotientHistogram law;
    law.cutoff = 20;
    const double scale = 1e12;
    for (std::uint64_t k = 1; k <= 20; ++k) {
        const auto c = static_cast<std::uint64_t>(std::llround(kuzmin_expected(static_cast<std::int64_t>(k)) * scale));
        law.counts[k] = c;
        law.total += c;
    }
    law.tail = static_cast<std::uint64_t>(std::llround(kuzmin_tail(20) * scale));
    law.total += law.tail;
    const KuzminComparison cmp = kuzmin_distance(law);
    CHECK(cmp.max_deviation < 1e-9);
    CHECK(cmp.total_variation < 1e-9);
    CHECK(cmp.rows.size() == 20);
}
