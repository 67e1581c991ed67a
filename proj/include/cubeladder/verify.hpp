#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cubeladder {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;  // each names the offending index

    bool passed() const { return failures.empty(); }
};

struct VerificationReport {
    std::int64_t m = 0;
    std::size_t length = 0;
    std::size_t oracle_length = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failure_count() const;
};

inline constexpr std::size_t default_oracle_cap = 500;

/// Runs every continued-fraction identity on both expansions, every ladder
/// property, and agreement with the interval oracle up to
/// min(length, oracle_cap). Throws CubeError for invalid m.
VerificationReport verify_all(std::int64_t m, std::size_t length,
                              std::size_t oracle_cap = default_oracle_cap);

}  // namespace cubeladder
