#include "cubeladder/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <future>
#include <numeric>
#include <string>

#include "cubeladder/cf_engine.hpp"
#include "cubeladder/cubic_field.hpp"
#include "cubeladder/ladder.hpp"
#include "cubeladder/oracle.hpp"

namespace cubeladder {

namespace {

class Recorder {
public:
    CheckResult& check(const std::string& name) {
        results_.push_back(CheckResult{name, 0, {}});
        return results_.back();
    }

    /// Runs body; an escaping exception becomes a failure of `name`.
    void guarded(const std::string& name, const std::function<void(CheckResult&)>& body) {
        CheckResult& result = check(name);
        try {
            body(result);
        } catch (const std::exception& e) {
            result.failures.push_back(std::string("exception: ") + e.what());
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void expect(CheckResult& result, bool ok, const std::string& where) {
    ++result.cases;
    if (!ok) result.failures.push_back(where);
}

std::string at(const char* label, std::size_t i) { return std::string(label) + "=" + std::to_string(i); }

std::vector<CheckResult> expansion_checks(const Expansion& exp) {
    const std::string prefix = exp.surd().power() == 1 ? "xi." : "eta.";
    const std::size_t len = exp.length();
    const std::int64_t m = exp.surd().m();
    Recorder rec;

    rec.guarded(prefix + "triplet_invariants", [&](CheckResult& r) {
        for (const Triplet& tr : exp.triplets()) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), tr.p_prev.get_mpz_t(), tr.q_prev.get_mpz_t());
            bool ok = g == 1 && tr.b == floor(tr.xi);
            if (tr.n >= 1) ok = ok && sign(tr.xi - BigInt(1)) > 0 && tr.b >= 1;
            expect(r, ok, at("n", tr.n));
        }
    });
    rec.guarded(prefix + "recurrence", [&](CheckResult& r) {
        for (std::size_t n = 0; n <= len; ++n) {
            const long i = static_cast<long>(n);
            const BigInt p_before = n == 0 ? BigInt(0) : exp.p(i - 2);
            const BigInt q_before = n == 0 ? BigInt(1) : exp.q(i - 2);
            expect(r, exp.p(i) == exp.b(n) * exp.p(i - 1) + p_before &&
                          exp.q(i) == exp.b(n) * exp.q(i - 1) + q_before,
                   at("n", n));
        }
    });
    rec.guarded(prefix + "complete_quotient_identity", [&](CheckResult& r) {
        for (std::size_t n = 2; n <= len; ++n) expect(r, complete_quotient_identity(exp, n), at("n", n));
    });
    rec.guarded(prefix + "complete_quotient_identity_formal", [&](CheckResult& r) {
        // n = 1 with the formal convergent p_{-1}/q_{-1} = 1/0: xi_1 = -1/(p_0 - q_0 xi).
        if (len < 1) return;
        const CubicNumber xi = exp.surd().value();
        const CubicNumber den = -(xi * exp.q(0)) + exp.p(0);
        const CubicNumber num = -(xi * exp.q(-1)) + exp.p(-1);
        expect(r, exp.triplet(1).xi == -(num / den), at("n", 1));
    });
    rec.guarded(prefix + "determinant_identity", [&](CheckResult& r) {
        for (std::size_t n = 0; n <= len; ++n) expect(r, determinant_identity(exp, n), at("n", n));
    });
    rec.guarded(prefix + "sandwich", [&](CheckResult& r) {
        const auto bad = sandwich_failure(exp);
        expect(r, !bad, bad ? at("convergent", *bad) : "");
    });
    rec.guarded(prefix + "delta_bounds", [&](CheckResult& r) {
        for (std::size_t n = 0; n < len; ++n) {
            const long i = static_cast<long>(n);
            expect(r, delta_bounds_check(exp.p(i), exp.q(i), exp.surd(), exp.b(n + 1)),
                   at("convergent", n));
        }
    });
    rec.guarded(prefix + "convergent_sufficient", [&](CheckResult& r) {
        // |delta| < 1/b_{n+1} <= 1/2 whenever the next quotient is at least 2.
        for (std::size_t n = 0; n < len; ++n) {
            if (exp.b(n + 1) < 2) continue;
            const long i = static_cast<long>(n);
            expect(r, is_convergent_sufficient(exp.p(i), exp.q(i), exp.surd()), at("convergent", n));
        }
    });
    rec.guarded(prefix + "relative_error_decreasing", [&](CheckResult& r) {
        const auto bad = relative_error_failure(exp);
        expect(r, !bad, bad ? at("convergent", *bad) : "");
    });
    rec.guarded(prefix + "convergent_ordering", [&](CheckResult& r) {
        const auto bad = ordering_failure(exp);
        expect(r, !bad, bad ? at("convergent", *bad) : "");
    });
    rec.guarded(prefix + "lemma_zveza", [&](CheckResult& r) {
        for (std::size_t n = 0; n <= len; ++n) {
            const long i = static_cast<long>(n);
            expect(r, lemma_zveza_check(exp.p(i), exp.q(i), m), at("convergent", n));
        }
    });
    return rec.take();
}

std::vector<CheckResult> ladder_checks(const Ladder& ladder) {
    const Expansion& xi = ladder.xi();
    const Expansion& eta = ladder.eta();
    const auto& conns = ladder.connections();
    const std::int64_t m = ladder.m();
    const BigInt mm = static_cast<long>(m);
    Recorder rec;

    auto where = [](const Connection& c) {
        return "(n=" + std::to_string(c.n) + ",k=" + std::to_string(c.k) + ")";
    };

    rec.guarded("ladder.connection_product", [&](CheckResult& r) {
        for (const Connection& c : conns) {
            const long n = static_cast<long>(c.n), k = static_cast<long>(c.k);
            expect(r, xi.p(n - 1) * eta.p(k - 1) == mm * xi.q(n - 1) * eta.q(k - 1), where(c));
        }
    });
    rec.guarded("ladder.recertify", [&](CheckResult& r) {
        for (const Connection& c : conns) expect(r, certify(c, xi, eta) == c.certificate(), where(c));
    });
    rec.guarded("ladder.rs_equals_m", [&](CheckResult& r) {
        for (const Connection& c : conns) expect(r, c.r * c.s == mm && c.r >= 1 && c.s >= 1, where(c));
    });
    rec.guarded("ladder.parity", [&](CheckResult& r) {
        for (const Connection& c : conns) expect(r, parity_check(c), where(c));
    });
    rec.guarded("ladder.t_identity", [&](CheckResult& r) {
        for (const Connection& c : conns) {
            const CubicNumber combo = xi.triplet(c.n).xi * c.r - eta.triplet(c.k).xi * c.s;
            expect(r, combo == CubicNumber::from_integer(m, c.t), where(c));
        }
    });
    rec.guarded("ladder.t_range", [&](CheckResult& r) {
        for (const Connection& c : conns) expect(r, t_range_check(c), where(c));
    });
    rec.guarded("ladder.theorem_bound", [&](CheckResult& r) {
        for (const Connection& c : conns) expect(r, theorem_bound_check(c, xi, eta), where(c));
    });
    rec.guarded("ladder.prime_corollary", [&](CheckResult& r) {
        for (const Connection& c : conns) expect(r, prime_corollary_check(c, m), where(c));
    });
    rec.guarded("ladder.noncrossing", [&](CheckResult& r) { expect(r, noncrossing_check(ladder), "ladder"); });
    rec.guarded("ladder.exchange", [&](CheckResult& r) {
        for (std::size_t i = 1; i < conns.size(); ++i) {
            if (conns[i].n == conns[i - 1].n + 1 && conns[i].k == conns[i - 1].k + 1) {
                expect(r, exchange_check(conns[i - 1], conns[i]), where(conns[i]));
            }
        }
    });
    rec.guarded("ladder.middle_zero", [&](CheckResult& r) {
        for (std::size_t i = 2; i < conns.size(); ++i) {
            const Connection& a = conns[i - 2];
            const Connection& b = conns[i - 1];
            const Connection& c = conns[i];
            if (b.n == a.n + 1 && b.k == a.k + 1 && c.n == b.n + 1 && c.k == b.k + 1) {
                expect(r, middle_zero_check(a, b, c, xi, eta), where(b));
            }
        }
    });
    rec.guarded("ladder.big_quotient_coverage", [&](CheckResult& r) {
        const CoverageReport report = big_quotient_coverage(ladder);
        r.cases += report.big_quotients;
        for (const Rung& rung : report.violations) {
            r.failures.push_back(to_string(rung.side) + " index=" + std::to_string(rung.index));
        }
    });
    return rec.take();
}

std::vector<CheckResult> oracle_checks(const Expansion& exp, std::size_t length) {
    const std::string name = exp.surd().power() == 1 ? "oracle.xi_agreement" : "oracle.eta_agreement";
    Recorder rec;
    rec.guarded(name, [&](CheckResult& r) {
        const auto reference = oracle::oracle_expand(exp.surd().m(), exp.surd().power(), length);
        for (std::size_t n = 0; n <= length; ++n) expect(r, reference[n] == exp.b(n), at("n", n));
    });
    return rec.take();
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t VerificationReport::failure_count() const {
    return std::accumulate(checks.begin(), checks.end(), std::size_t{0},
                           [](std::size_t acc, const CheckResult& c) { return acc + c.failures.size(); });
}

VerificationReport verify_all(std::int64_t m, std::size_t length, std::size_t oracle_cap) {
    require_noncube(m);
    VerificationReport report;
    report.m = m;
    report.length = length;
    report.oracle_length = std::min(length, oracle_cap);

    Expansion xi = expand(Surd(m, 1), length);
    Expansion eta = expand(Surd(m, 2), length);

    // Independent check groups; results are appended in a fixed order.
    auto xi_checks = std::async(std::launch::async, [&] { return expansion_checks(xi); });
    auto eta_checks = std::async(std::launch::async, [&] { return expansion_checks(eta); });
    auto xi_oracle = std::async(std::launch::async, [&] { return oracle_checks(xi, report.oracle_length); });
    auto eta_oracle = std::async(std::launch::async, [&] { return oracle_checks(eta, report.oracle_length); });

    std::vector<std::vector<CheckResult>> groups;
    groups.push_back(xi_checks.get());
    groups.push_back(eta_checks.get());

    std::vector<CheckResult> ladder_results;
    try {
        const Ladder ladder = find_connections(xi, eta);
        ladder_results = ladder_checks(ladder);
    } catch (const std::exception& e) {
        CheckResult failed{"ladder.construction", 1, {std::string("exception: ") + e.what()}};
        ladder_results.push_back(std::move(failed));
    }
    groups.push_back(std::move(ladder_results));
    groups.push_back(xi_oracle.get());
    groups.push_back(eta_oracle.get());

    for (auto& group : groups) {
        for (auto& check : group) report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace cubeladder
