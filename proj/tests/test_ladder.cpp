#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "cubeladder/errors.hpp"
#include "cubeladder/ladder.hpp"
#include "support/brute_force.hpp"

using namespace cubeladder;
using cubeladder::testing::brute_force_connections;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const Ladder& ladder) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Connection& c : ladder.connections()) out.emplace_back(c.n, c.k);
    return out;
}

const Connection& find(const Ladder& ladder, std::size_t n, std::size_t k) {
    const auto& conns = ladder.connections();
    const auto it = std::find_if(conns.begin(), conns.end(), [&](const Connection& c) { return c.n == n && c.k == k; });
    REQUIRE(it != conns.end());
    return *it;
}

Connection bare(std::size_t n, std::size_t k, long r = 1, long s = 1) {
    Connection c;
    c.n = n;
    c.k = k;
    c.r = r;
    c.s = s;
    return c;
}

}  // namespace

TEST_CASE("connections of the m = 2 ladder") {
    const Ladder ladder = build_ladder(2, 4);
    // 1/1 * 2/1, 4/3 * 3/2 and 5/4 * 8/5 all equal 2.
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(pairs_of(ladder) == std::vector<P>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(build_ladder(2, 1).connections().empty());
}

TEST_CASE("find_connections rejects mismatched sides") {
    CHECK_THROWS_AS(find_connections(expand(Surd(2, 1), 5), expand(Surd(3, 2), 5)), MixedField);
    CHECK_THROWS_AS(find_connections(expand(Surd(2, 2), 5), expand(Surd(2, 1), 5)), DomainError);
}

TEST_CASE("certificates") {
    const Ladder ladder = build_ladder(2, 10);
    const Connection& a = find(ladder, 2, 3);
    CHECK(a.r == 2);
    CHECK(a.s == 1);
    CHECK(a.t == 0);  // in [-r+1, s-1] = [-1, 0]
    const Connection& b = find(ladder, 3, 4);
    CHECK(b.r == 1);
    CHECK(b.s == 2);
    CHECK(certify(a, ladder.xi(), ladder.eta()) == a.certificate());

    Connection wrong = bare(2, 4);
    CHECK_THROWS_AS(certify(wrong, ladder.xi(), ladder.eta()), CertificateFailure);
    CHECK_THROWS_AS(certify(bare(0, 1), ladder.xi(), ladder.eta()), CertificateFailure);
}

TEST_CASE("theorem bound and parity") {
    const Ladder ladder = build_ladder(2, 10);
    const Connection& a = find(ladder, 2, 3);
    CHECK(quotient_combination(a, ladder.xi(), ladder.eta()) == 0);  // 2*1 - 1*2
    CHECK(theorem_bound_check(a, ladder.xi(), ladder.eta()));
    const Connection& b = find(ladder, 3, 4);
    CHECK(quotient_combination(b, ladder.xi(), ladder.eta()) == 1);  // 1*5 - 2*2
    CHECK(theorem_bound_check(b, ladder.xi(), ladder.eta()));

    CHECK(parity_check(a));
    CHECK(parity_check(b));
    CHECK_FALSE(parity_check(bare(2, 2)));
}

TEST_CASE("r = s = 1 collapses the bound to equal quotients") {
    // r*s = m >= 2 rules this out for real connections; exercise the bound alone.
    const Expansion xi = expand(Surd(2, 1), 5);
    const Expansion eta = expand(Surd(2, 2), 5);
    CHECK(theorem_bound_check(bare(1, 1), xi, eta) == (xi.b(1) == eta.b(1)));  // 3 vs 1
    CHECK(theorem_bound_check(bare(2, 1), xi, eta));                          // 1 vs 1
    CHECK_FALSE(theorem_bound_check(bare(3, 1), xi, eta));                    // 5 vs 1
}

TEST_CASE("exchange and middle-zero lemmas") {
    const Ladder ladder = build_ladder(2, 10);
    CHECK(exchange_check(find(ladder, 2, 3), find(ladder, 3, 4)));
    CHECK_THROWS_AS(exchange_check(bare(2, 3), bare(5, 6)), NotConsecutive);
    CHECK(middle_zero_check(find(ladder, 1, 2), find(ladder, 2, 3), find(ladder, 3, 4), ladder.xi(), ladder.eta()));
    CHECK_THROWS_AS(middle_zero_check(bare(1, 2), bare(2, 3), bare(4, 5), ladder.xi(), ladder.eta()),
                    NotConsecutive);
}

TEST_CASE("every consecutive pair and triple of the m = 2 and m = 6 ladders") {
    for (auto [m, length] : {std::pair<std::int64_t, std::size_t>{2, 1000}, {6, 500}}) {
        const Ladder ladder = build_ladder(m, length);
        const auto& conns = ladder.connections();
        std::size_t pairs = 0, triples = 0;
        for (std::size_t i = 1; i < conns.size(); ++i) {
            if (conns[i].n != conns[i - 1].n + 1 || conns[i].k != conns[i - 1].k + 1) continue;
            ++pairs;
            CHECK(exchange_check(conns[i - 1], conns[i]));
            if (i >= 2 && conns[i - 1].n == conns[i - 2].n + 1 && conns[i - 1].k == conns[i - 2].k + 1) {
                ++triples;
                CHECK(middle_zero_check(conns[i - 2], conns[i - 1], conns[i], ladder.xi(), ladder.eta()));
            }
        }
        CHECK(pairs > 0);
        CHECK(triples > 0);
        CHECK(noncrossing_check(ladder));
        const CoverageReport coverage = big_quotient_coverage(ladder);
        CHECK(coverage.violations.empty());
        CHECK(coverage.big_quotients > 0);
    }
}

TEST_CASE("connection invariants across many m") {
    for (std::int64_t m = 2; m <= 30; ++m) {
        if (m == 8 || m == 27) continue;
        CAPTURE(m);
        const Ladder ladder = build_ladder(m, 150);
        for (const Connection& c : ladder.connections()) {
            REQUIRE(c.r * c.s == m);
            REQUIRE(parity_check(c));
            REQUIRE(t_range_check(c));
            REQUIRE(theorem_bound_check(c, ladder.xi(), ladder.eta()));
            REQUIRE(prime_corollary_check(c, m));
            const CubicNumber combo = ladder.xi().triplet(c.n).xi * c.r - ladder.eta().triplet(c.k).xi * c.s;
            REQUIRE(combo == CubicNumber::from_integer(m, c.t));
        }
        REQUIRE(noncrossing_check(ladder));
    }
}

TEST_CASE("noncrossing") {
    CHECK(noncrossing_check(std::vector<Connection>{}));
    CHECK(noncrossing_check(std::vector<Connection>{bare(5, 6), bare(2, 3)}));
    CHECK_FALSE(noncrossing_check(std::vector<Connection>{bare(2, 5), bare(3, 4)}));
    CHECK_FALSE(noncrossing_check(std::vector<Connection>{bare(2, 5), bare(2, 7)}));
}

TEST_CASE("big quotient coverage on a short ladder") {
    const CoverageReport tiny = big_quotient_coverage(build_ladder(2, 1));
    CHECK(tiny.violations.empty());
    // b_1 = 3 < 5 for m = 2: nothing to cover.
    CHECK(tiny.big_quotients == 0);

    // Horizon effects: b_6 = 508 >= 13 in cbrt 6, but its partner is far away
    // when the cbrt 36 side is cut short.
    const Ladder cut = find_connections(expand(Surd(6, 1), 8), expand(Surd(6, 2), 3));
    const CoverageReport report = big_quotient_coverage(cut);
    CHECK(report.violations.empty());
    CHECK_FALSE(report.unresolved.empty());
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(47));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(49));
}

TEST_CASE("lookup detection equals brute force, N = 50") {
    for (std::int64_t m = 2; m <= 40; ++m) {
        if (m == 8 || m == 27) continue;
        CAPTURE(m);
        const Expansion xi = expand(Surd(m, 1), 50);
        const Expansion eta = expand(Surd(m, 2), 50);
        const auto expected = brute_force_connections(xi, eta);
        CHECK(pairs_of(find_connections(xi, eta)) == expected);
    }
}
