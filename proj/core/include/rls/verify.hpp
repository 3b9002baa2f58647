#pragma once

#include <string>
#include <vector>

namespace rls {

struct CheckResult {
    std::string id;      // stable identifier, e.g. "C05"
    std::string name;
    bool pass = false;
    double margin = 0.0;  // normalized slack remaining; negative means failed
    std::string detail;
};

/// Acceptance checks grouped into suites. "all" runs every check in order.
/// Suites: "oracle" (recursion vs direct-solve equivalences), "invariants"
/// (convergence laws, preservation and reduction properties), "bounds"
/// (spectral bound replays, asymptotic values, floors).
/// `corrupt_lambda`, when nonzero, recomputes the bound formulas of the bounds
/// suite with that factor instead of the one the data was generated with —
/// a deliberate negative control that must fail.
std::vector<CheckResult> verify_suite(const std::string& suite, double corrupt_lambda = 0.0);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rls
