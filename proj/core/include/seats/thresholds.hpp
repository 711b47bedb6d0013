#pragma once

#include "seats/tau.hpp"

#include <optional>

namespace seats {

struct FloorThresholds {
    double y1, y2, y3; // per-state floor stabilization points along the tau-line
    double y_floor;    // max of the three
};

/// Closed-form floor-stabilization thresholds. The y2 component branches on
/// the sign of tau (the middle quota is monotone toward its limit from below
/// for tau < 0 and from above for tau > 0, constant at tau = 0).
/// Throws ExceptionalTau when q3 is an integer.
FloorThresholds floor_threshold(const TauValue& tau, int M);

/// Same formulas with the quota floors already known; used on quadrature
/// subintervals where floor(q3) is constant.
FloorThresholds floor_threshold_at(double tau, int M, long long floor_q2,
                                   long long floor_q3);

struct NonViolatoryThreshold {
    double y_star; // priority-equality point
    double y_tau;  // max(y_floor, y_star): violations cannot outlast this
};

/// Threshold past which the guaranteed seat stops causing violations.
/// Throws ViolatoryTau when tau is ultimately violatory (the window never
/// closes there and y_tau degenerates to y_floor).
NonViolatoryThreshold nonviolatory_threshold(Method m, const TauValue& tau, int M);

/// y_star by formula when the floors are known (quadrature path); +inf when
/// the priority equality has no positive solution.
double y_star_at(Method m, double tau, int M, long long floor_q3);

/// Upper end of the violation window along the tau-line: +inf for ultimately
/// violatory tau, otherwise the non-violatory threshold.
double y_max(Method m, const TauValue& tau, int M);

struct ThresholdSet {
    double y1, y2, y3;
    double y_floor;
    std::optional<double> y_star; // absent when tau is ultimately violatory
    double y_tau;
    double y_max; // +inf when ultimately violatory
    bool ultimately_violatory;
};

ThresholdSet threshold_set(Method m, const TauValue& tau, int M);

} // namespace seats
