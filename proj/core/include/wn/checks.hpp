#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wn/cohomology.hpp"
#include "wn/modules.hpp"

namespace wn::checks {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;      // carries a replayable counterexample on failure
    double millis = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Coefficients of prod_{k=1}^{n-1} (1 - t^{2k})^{-1} up to max_degree.
std::vector<std::int64_t> cohomology_series_coeffs(int n, int max_degree);

/// Valid suite ids: jacobi, complex, cut, hilbert, detecting, kac, supports, all.
bool is_valid_suite(const std::string& suite);

/// Runs one suite (or all of them) for every rank in [n_lo, n_hi].  Each
/// sub-check applies only to the ranks it is specified for; ranks outside a
/// check's range are skipped silently.
SuiteResult run_suite(const std::string& suite, int n_lo, int n_hi, std::uint64_t seed,
                      Caps caps = Caps{});

// individual suites (exposed for the acceptance tests)
SuiteResult suite_jacobi(int n_lo, int n_hi, std::uint64_t seed);
SuiteResult suite_complex(int n_lo, int n_hi, Caps caps);
SuiteResult suite_cut(int n_lo, int n_hi, Caps caps);
SuiteResult suite_hilbert(int n_lo, int n_hi, Caps caps);
SuiteResult suite_detecting(int n_lo, int n_hi, std::uint64_t seed, Caps caps);
SuiteResult suite_kac(int n_lo, int n_hi);
SuiteResult suite_supports(int n_lo, int n_hi, std::uint64_t seed);

} // namespace wn::checks
