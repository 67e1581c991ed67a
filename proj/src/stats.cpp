#include "cubeladder/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cubeladder/errors.hpp"

namespace cubeladder {

double kuzmin_expected(std::int64_t k) {
    if (k < 1) throw DomainError("Kuzmin probability needs k >= 1 (got " + std::to_string(k) + ")");
    // (k+1)^2 / (k(k+2)) = 1 + 1/(k(k+2))
    const long double kk = static_cast<long double>(k);
    return static_cast<double>(std::log1p(1.0L / (kk * (kk + 2.0L))) / std::log(2.0L));
}

double kuzmin_tail(std::int64_t cutoff) {
    if (cutoff < 0) throw DomainError("cutoff must be non-negative");
    const long double kk = static_cast<long double>(cutoff);
    return static_cast<double>(std::log1p(1.0L / (kk + 1.0L)) / std::log(2.0L));
}

void QuotientHistogram::add(const BigInt& b) {
    if (b < 1) throw DomainError("partial quotients in a histogram must be >= 1");
    ++total;
    if (b > cutoff) {
        ++tail;
    } else {
        ++counts[b.get_ui()];
    }
}

void QuotientHistogram::merge(const QuotientHistogram& other) {
    if (other.cutoff != cutoff) throw DomainError("cannot merge histograms with different cutoffs");
    for (const auto& [k, c] : other.counts) counts[k] += c;
    total += other.total;
    tail += other.tail;
}

std::uint64_t QuotientHistogram::count(std::uint64_t k) const {
    const auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
}

QuotientHistogram histogram(std::span<const BigInt> quotients, std::uint64_t cutoff) {
    QuotientHistogram h;
    h.cutoff = cutoff;
    for (const BigInt& b : quotients) h.add(b);
    return h;
}

KuzminComparison kuzmin_distance(const QuotientHistogram& h) {
    if (h.total == 0) throw EmptyHistogram("empty sample");
    const double total = static_cast<double>(h.total);

    KuzminComparison out;
    out.rows.reserve(h.cutoff);
    double abs_sum = 0.0;
    for (std::uint64_t k = 1; k <= h.cutoff; ++k) {
        KuzminRow row;
        row.k = k;
        row.count = h.count(k);
        row.empirical = static_cast<double>(row.count) / total;
        row.expected = kuzmin_expected(static_cast<std::int64_t>(k));
        row.deviation = row.empirical - row.expected;
        out.max_deviation = std::max(out.max_deviation, std::abs(row.deviation));
        abs_sum += std::abs(row.deviation);
        out.rows.push_back(row);
    }
    out.tail_empirical = static_cast<double>(h.tail) / total;
    out.tail_expected = kuzmin_tail(static_cast<std::int64_t>(h.cutoff));
    out.total_variation = 0.5 * (abs_sum + std::abs(out.tail_empirical - out.tail_expected));
    return out;
}

}  // namespace cubeladder
