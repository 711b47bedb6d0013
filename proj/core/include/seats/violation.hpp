#pragma once

#include "seats/engine.hpp"
#include "seats/instance.hpp"

#include <vector>

namespace seats {

enum class ViolationStatus { None, Lower, Upper };

enum class ViolationCause {
    NotApplicable,              // no violation
    Intrinsic,                  // the base method violates on its own: either the
                                //   modified method disagrees, or the violation is
                                //   an upper one (the guarantee only removes seats
                                //   from non-guaranteed states, so it can only
                                //   depress a state below its floor)
    CausedByNonzero,            // lower violation, Amod = A, and A without the
                                //   smallest state is quota-compliant on M seats
    CausedOrWorsenedByNonzero,  // lower violation and Amod = A only
};

struct ViolationReport {
    ViolationStatus status = ViolationStatus::None;
    std::vector<int> offending_states;  // indices into the instance, input order
    ViolationCause cause = ViolationCause::NotApplicable;

    bool operator==(const ViolationReport&) const = default;
};

const char* to_string(ViolationStatus s);
const char* to_string(ViolationCause c);

/// Compares an apportionment against the quota envelope.
ViolationReport quota_check(const std::vector<Rational>& pops,
                            const std::vector<int>& allocation, int M);

/// Runs the method, detects quota violations, and classifies their cause
/// with respect to the nonzero-allocation constraint. Cause analysis follows
/// the three-condition definition; it is exact for any n but the paper only
/// treats n = 3.
ViolationReport classify_violation(Method m, const PopulationInstance& inst);

/// Lower-quota-violation criteria test for three states. True iff the three
/// closed-form conditions hold on the (ascending) quotas. Only valid for the
/// five nonzero-allocation methods.
bool criteria_test(Method m, const QuotaVector& quotas, int M);

} // namespace seats
