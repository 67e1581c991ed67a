#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cubeladder/bigint.hpp"

namespace cubeladder {

/// Kuzmin probability log2((k+1)^2 / (k(k+2))) of a partial quotient equal
/// to k. Throws DomainError for k < 1.
double kuzmin_expected(std::int64_t k);

/// Kuzmin mass of all quotients above `cutoff`: log2((K+2)/(K+1)) by telescoping.
double kuzmin_tail(std::int64_t cutoff);

inline constexpr std::uint64_t default_cutoff = 100;

/// Counts of partial quotients 1..cutoff plus a tail bucket for larger ones.
struct QuotientHistogram {
    std::uint64_t cutoff = default_cutoff;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    std::uint64_t tail = 0;

    /// Throws DomainError for quotients below 1.
    void add(const BigInt& b);
    /// Associative and commutative; cutoffs must agree.
    void merge(const QuotientHistogram& other);
    std::uint64_t count(std::uint64_t k) const;
};

/// Histogram of b_1, b_2, ... (callers drop b_0, the integer part).
QuotientHistogram histogram(std::span<const BigInt> quotients, std::uint64_t cutoff = default_cutoff);

struct KuzminRow {
    std::uint64_t k = 0;
    std::uint64_t count = 0;
    double empirical = 0.0;
    double expected = 0.0;
    double deviation = 0.0;  // empirical - expected
};

struct KuzminComparison {
    std::vector<KuzminRow> rows;  // k = 1..cutoff
    double tail_empirical = 0.0;
    double tail_expected = 0.0;
    double max_deviation = 0.0;  // over rows, absolute
    double total_variation = 0.0;  // including the tail bucket
};

/// Throws EmptyHistogram when the histogram has no samples.
KuzminComparison kuzmin_distance(const QuotientHistogram& h);

}  // namespace cubeladder
