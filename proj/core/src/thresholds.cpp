#include "seats/thresholds.hpp"

#include "seats/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace seats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

FloorThresholds floor_threshold_at(double tau, int M, long long floor_q2,
                                   long long floor_q3) {
    FloorThresholds t{};
    t.y1 = (2.0 * M - 3.0) / (3.0 - 3.0 * tau);

    if (tau == 0.0) {
        t.y2 = 1.0; // q2 is constant along the tau = 0 line
    } else {
        // q2 crosses floor(q2) from below (tau < 0) or ceil-side from above.
        double c = tau < 0 ? static_cast<double>(floor_q2)
                           : static_cast<double>(floor_q2 + 1);
        t.y2 = (3.0 * c - M) / (M - 3.0 * M * tau - 3.0 * c + 3.0 * tau * c);
    }

    double f3 = static_cast<double>(floor_q3);
    t.y3 = 3.0 * f3 / (2.0 * M - 3.0 * f3 + 3.0 * tau * f3);

    t.y_floor = std::max({t.y1, t.y2, t.y3});
    return t;
}

FloorThresholds floor_threshold(const TauValue& tau, int M) {
    LimitingQuotas lq = limiting_quotas(tau, M);
    if (lq.exceptional) throw ExceptionalTau("floor thresholds undefined at integral q3");
    return floor_threshold_at(tau.as_double(), M, to_ll(floor_rat(lq.q2)),
                              to_ll(floor_rat(lq.q3)));
}

double y_star_at(Method m, double tau, int M, long long floor_q3) {
    // floor(q2) = M - floor(q3) - 1 for nonintegral q3.
    double dk = divisor_value(m, floor_q3 - 1);
    double dq2 = divisor_value(m, M - floor_q3 - 1);
    double den = 2.0 * dq2 + (3.0 * tau - 1.0) * dk;
    if (den <= 0.0) return kInf;
    return dk / den;
}

NonViolatoryThreshold nonviolatory_threshold(Method m, const TauValue& tau, int M) {
    if (is_ultimately_violatory(m, M, tau))
        throw ViolatoryTau("tau is ultimately violatory; the window never closes");
    LimitingQuotas lq = limiting_quotas(tau, M);
    FloorThresholds ft = floor_threshold(tau, M);
    double ys = y_star_at(m, tau.as_double(), M, to_ll(floor_rat(lq.q3)));
    return {ys, std::max(ft.y_floor, ys)};
}

double y_max(Method m, const TauValue& tau, int M) {
    if (is_ultimately_violatory(m, M, tau)) return kInf;
    return nonviolatory_threshold(m, tau, M).y_tau;
}

ThresholdSet threshold_set(Method m, const TauValue& tau, int M) {
    FloorThresholds ft = floor_threshold(tau, M);
    ThresholdSet s{};
    s.y1 = ft.y1;
    s.y2 = ft.y2;
    s.y3 = ft.y3;
    s.y_floor = ft.y_floor;
    s.ultimately_violatory = is_ultimately_violatory(m, M, tau);
    if (s.ultimately_violatory) {
        s.y_tau = ft.y_floor; // the window (y_floor, inf) never closes
        s.y_max = kInf;
    } else {
        NonViolatoryThreshold nv = nonviolatory_threshold(m, tau, M);
        s.y_star = nv.y_star;
        s.y_tau = nv.y_tau;
        s.y_max = nv.y_tau;
    }
    return s;
}

} // namespace seats
