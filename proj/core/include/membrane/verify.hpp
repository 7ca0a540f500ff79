#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace membrane {

/// One verification suite: a named bundle of checks with pinned tolerances.
/// Suites are what `verify --suite <name>` runs and what the acceptance
/// binary iterates over.
struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
};

/// Names in fixed order:
///   norm-bounds, complementarity, membership, invariance, cosine-axioms,
///   heat-kernel, transmission, skew-convergence, irregular-convergence,
///   projection-convergence, dirac, conjugation.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

}  // namespace membrane
