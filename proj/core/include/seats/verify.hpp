#pragma once

#include "seats/montecarlo.hpp"

#include <string>
#include <vector>

namespace seats {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0;
};

struct VerifyOptions {
    long long samples = 100000;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0; // 0 = hardware concurrency
};

/// The ten verification checks. Each pins its tolerances and sample counts
/// from the published tables and runs end to end against the library.
CheckResult verify_table1();                                  // 30-entry probability table
CheckResult verify_jefferson_closed_form();                   // 1/(M-1) vs the sum, M in [3,500]
CheckResult verify_limits();                                  // M=1000 sums vs the limits
CheckResult verify_appendix_integrals();                      // 12 exp-iid integral values
CheckResult verify_appendix_montecarlo(const VerifyOptions&); // CI containment counts
CheckResult verify_oracle_equivalence(const VerifyOptions&);  // criteria test vs engine
CheckResult verify_structural_properties(const VerifyOptions&);
CheckResult verify_tau_consistency(const VerifyOptions&);     // set length + stabilization
CheckResult verify_threshold_windows(const VerifyOptions&);   // violation window scans
CheckResult verify_tau_uniformity(const VerifyOptions&);      // KS at the 1% level

/// suite: "table1", "appendix", "properties" or "all".
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

} // namespace seats
