#pragma once

#include <string>
#include <vector>

#include "wheelinv/matrix.hpp"

namespace wheelinv {

struct CheckResult {
    std::string check_id;
    int n = 0;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<int> n_values;
    std::vector<CheckResult> checks;  // sorted by n, then check_id
    bool overall = true;
};

struct VerifyOptions {
    int n_max = 21;
    // Damages one off-diagonal entry of the special Laplacian before running
    // the checks. Negative-path hook: a healthy run must turn red under it.
    bool perturb = false;
};

// Runs the whole check battery for every odd n in [5, n_max]. Distinct n are
// independent and evaluated concurrently; results are merged and sorted, so
// the report is deterministic either way.
VerificationReport run_verification(const VerifyOptions& opt);

std::string report_to_json(const VerificationReport& rep);

}  // namespace wheelinv
