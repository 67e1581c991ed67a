#include "cubeladder/ladder.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "cubeladder/errors.hpp"

namespace cubeladder {

namespace {

using FractionKey = std::pair<BigInt, BigInt>;

struct FractionKeyHash {
    std::size_t operator()(const FractionKey& key) const noexcept {
        const BigIntHash h;
        return h(key.first) * 31 + h(key.second);
    }
};

using ConvergentIndex = std::unordered_map<FractionKey, std::size_t, FractionKeyHash>;

/// Maps every triplet convergent p_{i-1}/q_{i-1}, i >= 1, to i.
ConvergentIndex index_triplets(const Expansion& exp) {
    ConvergentIndex out;
    out.reserve(exp.length());
    for (std::size_t i = 1; i <= exp.length(); ++i) {
        const Triplet& tr = exp.triplet(i);
        out.emplace(FractionKey{tr.p_prev, tr.q_prev}, i);
    }
    return out;
}

/// m*q/p in lowest terms.
FractionKey partner_fraction(const BigInt& p, const BigInt& q, std::int64_t m) {
    BigInt num = q * static_cast<long>(m);
    BigInt den = p;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    return {std::move(num), std::move(den)};
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
    if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw CertificateFailure(std::string("inexact division computing ") + what);
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

void require_consecutive(const Connection& a, const Connection& b) {
    if (b.n != a.n + 1 || b.k != a.k + 1) {
        throw NotConsecutive("connections (" + std::to_string(a.n) + "," + std::to_string(a.k) +
                             ") and (" + std::to_string(b.n) + "," + std::to_string(b.k) +
                             ") are not consecutive");
    }
}

}  // namespace

Ladder::Ladder(Expansion xi, Expansion eta, std::vector<Connection> connections)
    : xi_(std::move(xi)), eta_(std::move(eta)), connections_(std::move(connections)) {}

Ladder find_connections(Expansion xi, Expansion eta) {
    const std::int64_t m = xi.surd().m();
    if (eta.surd().m() != m) {
        throw MixedField("ladder sides over different m: " + std::to_string(m) + " and " +
                         std::to_string(eta.surd().m()));
    }
    if (xi.surd().power() != 1 || eta.surd().power() != 2) {
        throw DomainError("ladder needs the expansions of cbrt(m) and cbrt(m^2), in that order");
    }

    const ConvergentIndex eta_index = index_triplets(eta);
    std::vector<Connection> connections;
    for (std::size_t n = 1; n <= xi.length(); ++n) {
        const Triplet& tr = xi.triplet(n);
        const auto hit = eta_index.find(partner_fraction(tr.p_prev, tr.q_prev, m));
        if (hit == eta_index.end()) continue;

        Connection conn;
        conn.n = n;
        conn.k = hit->second;
        Certificate cert = certify(conn, xi, eta);
        conn.r = std::move(cert.r);
        conn.s = std::move(cert.s);
        conn.t = std::move(cert.t);
        connections.push_back(std::move(conn));
    }
    // Probed in increasing n already.
    return Ladder(std::move(xi), std::move(eta), std::move(connections));
}

Ladder build_ladder(std::int64_t m, std::size_t length) {
    return find_connections(expand(Surd(m, 1), length), expand(Surd(m, 2), length));
}

Certificate certify(const Connection& conn, const Expansion& xi, const Expansion& eta) {
    const std::int64_t m = xi.surd().m();
    const BigInt mm = static_cast<long>(m);
    if (conn.n < 1 || conn.k < 1 || conn.n > xi.length() || conn.k > eta.length()) {
        throw CertificateFailure("connection indices out of range");
    }
    const long n = static_cast<long>(conn.n);
    const long k = static_cast<long>(conn.k);

    const BigInt& p1 = xi.p(n - 1);
    const BigInt& q1 = xi.q(n - 1);
    const BigInt& p2 = xi.p(n - 2);
    const BigInt& q2 = xi.q(n - 2);
    const BigInt& big_p1 = eta.p(k - 1);
    const BigInt& big_q1 = eta.q(k - 1);
    const BigInt& big_p2 = eta.p(k - 2);
    const BigInt& big_q2 = eta.q(k - 2);

    if (p1 * big_p1 != mm * q1 * big_q1) {
        throw CertificateFailure("convergents do not multiply to m");
    }

    Certificate out;
    out.r = exact_quotient(p1, big_q1, "r");
    out.s = exact_quotient(big_p1, q1, "s");
    if (out.r * out.s != mm) throw CertificateFailure("r*s != m");

    const BigInt t_first = exact_quotient(big_p2 - out.r * q2, q1, "t (first form)");
    const BigInt t_second = exact_quotient(mm * big_q2 - out.r * p2, p1, "t (second form)");
    if (t_first != t_second) throw CertificateFailure("the two forms of t disagree");
    out.t = t_first;

    const CubicNumber combo = xi.triplet(conn.n).xi * out.r - eta.triplet(conn.k).xi * out.s;
    if (!(combo == CubicNumber::from_integer(m, out.t))) {
        throw CertificateFailure("r*xi_n - s*eta_k != t");
    }
    return out;
}

bool t_range_check(const Connection& conn) {
    return conn.t >= 1 - conn.r && conn.t <= conn.s - 1;
}

BigInt quotient_combination(const Connection& conn, const Expansion& xi, const Expansion& eta) {
    return conn.r * xi.b(conn.n) - conn.s * eta.b(conn.k);
}

bool theorem_bound_check(const Connection& conn, const Expansion& xi, const Expansion& eta) {
    const BigInt v = quotient_combination(conn, xi, eta);
    return v >= 2 - 2 * conn.r && v <= 2 * conn.s - 2;
}

bool parity_check(const Connection& conn) { return (conn.n + conn.k) % 2 == 1; }

bool exchange_check(const Connection& c1, const Connection& c2) {
    require_consecutive(c1, c2);
    return c1.r == c2.s && c1.s == c2.r;
}

bool middle_zero_check(const Connection& c1, const Connection& c2, const Connection& c3,
                       const Expansion& xi, const Expansion& eta) {
    require_consecutive(c1, c2);
    require_consecutive(c2, c3);
    return sgn(quotient_combination(c2, xi, eta)) == 0;
}

bool prime_corollary_check(const Connection& conn, std::int64_t m) {
    if (!is_prime(m)) return true;
    const BigInt mm = static_cast<long>(m);
    return (conn.r == 1 && conn.s == mm) || (conn.r == mm && conn.s == 1);
}

bool noncrossing_check(const std::vector<Connection>& connections) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(connections.size());
    for (const Connection& c : connections) pairs.emplace_back(c.n, c.k);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i - 1].first || pairs[i].second <= pairs[i - 1].second) {
            return false;
        }
    }
    return true;
}

bool noncrossing_check(const Ladder& ladder) { return noncrossing_check(ladder.connections()); }

std::string to_string(Side side) { return side == Side::xi ? "xi" : "eta"; }

CoverageReport big_quotient_coverage(const Ladder& ladder) {
    const std::int64_t m = ladder.m();
    const BigInt threshold = BigInt(2 * m + 1);

    std::vector<bool> xi_connected(ladder.xi().length() + 1, false);
    std::vector<bool> eta_connected(ladder.eta().length() + 1, false);
    for (const Connection& c : ladder.connections()) {
        xi_connected[c.n] = true;
        eta_connected[c.k] = true;
    }

    CoverageReport report;
    auto scan = [&](Side side, const Expansion& own, const Expansion& other,
                    const std::vector<bool>& connected) {
        // Largest convergent denominator stored as a triplet on the other side.
        const BigInt& horizon = other.q(static_cast<long>(other.length()) - 1);
        for (std::size_t i = 1; i <= own.length(); ++i) {
            const Triplet& tr = own.triplet(i);
            if (tr.b < threshold) continue;
            ++report.big_quotients;
            if (connected[i]) continue;
            const FractionKey partner = partner_fraction(tr.p_prev, tr.q_prev, m);
            Rung rung{side, i, tr.b};
            if (partner.second > horizon) {
                report.unresolved.push_back(std::move(rung));
            } else {
                report.violations.push_back(std::move(rung));
            }
        }
    };
    scan(Side::xi, ladder.xi(), ladder.eta(), xi_connected);
    scan(Side::eta, ladder.eta(), ladder.xi(), eta_connected);
    return report;
}

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

}  // namespace cubeladder
