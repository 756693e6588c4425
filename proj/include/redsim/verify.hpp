// verify.hpp
// Seeded randomized suites over every swap relation, for the verify command.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace redsim {

struct VerifyConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    double tolerance = 1e-9;
};

struct SuiteResult {
    std::string name;
    long trials = 0;
    long outcomes_checked = 0;
    double max_residual = 0.0;
    std::string worst_case;     // reproducible description of the worst input
    bool informational = false; // reported but not counted toward pass/fail
    bool pass = true;
    std::string note;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<SuiteResult> suites;
    bool all_pass = true;  // over non-informational suites
};

/// Runs every relation suite with the given seed/trial budget. Residual
/// suites pass iff max residual < tolerance. The capacity-bound suite is
/// informational: swapping can concentrate entanglement, so the bound it
/// tracks fails for a sizable fraction of random inputs by construction.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace redsim
