#include "seats/violation.hpp"

#include "seats/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace seats {

const char* to_string(ViolationStatus s) {
    switch (s) {
    case ViolationStatus::None: return "none";
    case ViolationStatus::Lower: return "lower";
    case ViolationStatus::Upper: return "upper";
    }
    return "?";
}

const char* to_string(ViolationCause c) {
    switch (c) {
    case ViolationCause::NotApplicable: return "n/a";
    case ViolationCause::Intrinsic: return "intrinsic";
    case ViolationCause::CausedByNonzero: return "caused-by-nonzero";
    case ViolationCause::CausedOrWorsenedByNonzero: return "caused-or-worsened-by-nonzero";
    }
    return "?";
}

ViolationReport quota_check(const std::vector<Rational>& pops,
                            const std::vector<int>& allocation, int M) {
    QuotaVector qv = standard_quotas(pops, M);
    ViolationReport report;
    std::vector<int> lower, upper;
    for (int i = 0; i < qv.size(); ++i) {
        if (allocation[i] < qv.floors[i]) lower.push_back(i);
        if (allocation[i] > qv.ceilings[i]) upper.push_back(i);
    }
    if (!lower.empty() && !upper.empty())
        throw std::logic_error("simultaneous upper and lower quota violation");
    if (!lower.empty()) {
        report.status = ViolationStatus::Lower;
        report.offending_states = std::move(lower);
    } else if (!upper.empty()) {
        report.status = ViolationStatus::Upper;
        report.offending_states = std::move(upper);
    }
    return report;
}

ViolationReport classify_violation(Method m, const PopulationInstance& inst) {
    Apportionment a = apportion(m, inst);
    ViolationReport report = quota_check(inst.populations, a.allocation, inst.seats);
    if (report.status == ViolationStatus::None) return report;

    // The guarantee can only pull seats away from non-guaranteed states, so
    // it can depress a state below its floor but never lift one above its
    // ceiling. Upper violations (modified Jefferson keeps Jefferson's) are
    // the base method's own behavior.
    if (!guarantees_nonzero(m) || report.status == ViolationStatus::Upper) {
        report.cause = ViolationCause::Intrinsic;
        return report;
    }

    Apportionment modified = modified_apportion(m, inst);
    if (modified.allocation != a.allocation) {
        report.cause = ViolationCause::Intrinsic;
        return report;
    }

    // Condition (3): the method without the smallest state, still on M seats.
    const auto order = inst.ascending_order();
    std::vector<Rational> rest;
    for (size_t j = 1; j < order.size(); ++j) rest.push_back(inst.populations[order[j]]);
    Apportionment without = apportion(m, rest, inst.seats);
    ViolationReport rest_report = quota_check(rest, without.allocation, inst.seats);

    report.cause = rest_report.status == ViolationStatus::None
                       ? ViolationCause::CausedByNonzero
                       : ViolationCause::CausedOrWorsenedByNonzero;
    return report;
}

bool criteria_test(Method m, const QuotaVector& quotas, int M) {
    if (!guarantees_nonzero(m))
        throw UnsupportedMethod("criteria test covers only nonzero-allocation methods");
    if (quotas.size() != 3)
        throw std::invalid_argument("criteria test is defined for three states");

    std::vector<int> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return quotas.quotas[a] < quotas.quotas[b]; });
    const Rational& q1 = quotas.quotas[idx[0]];
    const Rational& q2 = quotas.quotas[idx[1]];
    const Rational& q3 = quotas.quotas[idx[2]];
    long long f1 = quotas.floors[idx[0]];
    long long f2 = quotas.floors[idx[1]];
    long long f3 = quotas.floors[idx[2]];
    long long c1 = quotas.ceilings[idx[0]];
    long long c2 = quotas.ceilings[idx[1]];

    if (f3 < 1) return false; // largest quota below 1 cannot lose a floor seat

    // (1) q3 d(floor q1) < q1 d(floor q3 - 1)
    // (2) q3 d(floor q2) < q2 d(floor q3 - 1)
    // (3) ceil q1 + ceil q2 + floor q3 = M + 1
    if (compare_scaled(m, q3, f1, q1, f3 - 1) >= 0) return false;
    if (compare_scaled(m, q3, f2, q2, f3 - 1) >= 0) return false;
    return c1 + c2 + f3 == M + 1;
}

} // namespace seats
