#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeladder/bigint.hpp"
#include "cubeladder/cf_engine.hpp"

namespace cubeladder {

/// Certificates of a connection between triplet n of cbrt(m) and triplet k
/// of cbrt(m^2):
///   r = p_{n-1} / Q_{k-1},  s = P_{k-1} / q_{n-1},  r*s = m,
///   t = r*xi_n - s*eta_k, an integer.
struct Certificate {
    BigInt r;
    BigInt s;
    BigInt t;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Triplets n and k whose convergents multiply to m:
/// (p_{n-1}/q_{n-1}) * (P_{k-1}/Q_{k-1}) = m.
struct Connection {
    std::size_t n = 0;
    std::size_t k = 0;
    BigInt r;
    BigInt s;
    BigInt t;

    Certificate certificate() const { return {r, s, t}; }
};

/// Both expansions plus every connection between them, sorted by n.
class Ladder {
public:
    Ladder(Expansion xi, Expansion eta, std::vector<Connection> connections);

    std::int64_t m() const { return xi_.surd().m(); }
    const Expansion& xi() const { return xi_; }
    const Expansion& eta() const { return eta_; }
    const std::vector<Connection>& connections() const { return connections_; }

private:
    Expansion xi_;
    Expansion eta_;
    std::vector<Connection> connections_;
};

/// Builds the ladder of (cbrt m, cbrt m^2) up to triplet index N on each side.
///
/// Indexes every reduced cbrt(m^2) convergent P_{k-1}/Q_{k-1} (k >= 1), then
/// probes with m*q_{n-1}/p_{n-1} in lowest terms for each n >= 1. Every
/// detected connection is certified. Throws MixedField if the surds' m differ.
Ladder find_connections(Expansion xi, Expansion eta);

/// Convenience: expands both surds of m to `length` and builds the ladder.
Ladder build_ladder(std::int64_t m, std::size_t length);

/// Recomputes r, s and t from raw convergents. Both forms of t
/// (P_{k-2} - r q_{n-2}) / q_{n-1} and (m Q_{k-2} - r p_{n-2}) / p_{n-1} must
/// be exact and equal, and r*xi_n - s*eta_k = t must hold in Q(cbrt m).
/// Throws CertificateFailure otherwise.
Certificate certify(const Connection& conn, const Expansion& xi, const Expansion& eta);

/// -r + 1 <= t <= s - 1
bool t_range_check(const Connection& conn);

/// -2r + 2 <= r*b_n - s*B_k <= 2s - 2
bool theorem_bound_check(const Connection& conn, const Expansion& xi, const Expansion& eta);

/// r*b_n - s*B_k for a connection.
BigInt quotient_combination(const Connection& conn, const Expansion& xi, const Expansion& eta);

/// n and k have different parity.
bool parity_check(const Connection& conn);

/// For consecutive c1 = (n-1, k-1), c2 = (n, k): r and s swap roles.
/// Throws NotConsecutive.
bool exchange_check(const Connection& c1, const Connection& c2);

/// For consecutive c1, c2, c3: r*b_n - s*B_k = 0 at the middle connection.
/// Throws NotConsecutive.
bool middle_zero_check(const Connection& c1, const Connection& c2, const Connection& c3,
                       const Expansion& xi, const Expansion& eta);

/// For prime m: {r, s} = {1, m}. Always true for composite m.
bool prime_corollary_check(const Connection& conn, std::int64_t m);

/// Connections sorted by n have strictly increasing k.
bool noncrossing_check(const std::vector<Connection>& connections);
bool noncrossing_check(const Ladder& ladder);

enum class Side { xi, eta };

std::string to_string(Side side);

struct Rung {
    Side side = Side::xi;
    std::size_t index = 0;
    BigInt quotient;
};

/// Rungs whose partial quotient is at least 2m+1 and therefore must be
/// connected. A rung whose partner m*q/p has a denominator beyond the last
/// stored convergent on the other side is reported as unresolved, not as a
/// violation.
struct CoverageReport {
    std::vector<Rung> violations;
    std::vector<Rung> unresolved;
    std::size_t big_quotients = 0;
};

CoverageReport big_quotient_coverage(const Ladder& ladder);

bool is_prime(std::int64_t v);

}  // namespace cubeladder
