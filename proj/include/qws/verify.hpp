// verify.hpp
// Self-check suite behind the `verify` CLI subcommand: analytic eigensystems
// against the iterated operators, reduced dynamics against the full-space
// brute-force paths, and simulated peaks against the closed-form predictions.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qws {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::size_t oracle_cap = 64;  // bounds the full-space cross-check sizes
    double tol_p = 0.02;          // peak probability tolerance
    double tol_t_rel = 0.05;      // relative peak time tolerance
};

// Runs every check; failures never throw, they come back as pass = false.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace qws
