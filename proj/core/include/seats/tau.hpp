#pragma once

#include "seats/engine.hpp"
#include "seats/method.hpp"

#include <utility>
#include <vector>

namespace seats {

/// The skewness statistic (mean - median)/max of a population triple,
/// confined to the open interval (-1/3, 1/3).
class TauValue {
public:
    explicit TauValue(Rational v);
    static TauValue from_double(double t) { return TauValue(Rational(t)); }

    const Rational& value() const { return value_; }
    double as_double() const { return to_double(value_); }

private:
    Rational value_;
};

/// tau of a triple of distinct positive values (any order).
TauValue tau_of(const Rational& a, const Rational& b, const Rational& c);
double tau_of(double a, double b, double c);

/// y completing (1, x, y) on the tau-line: y = (2x-1)/(1-3tau).
/// Throws OutOfWedge when the result does not satisfy 1 < x < y.
Rational y_on_line(const Rational& x, const TauValue& tau);
inline double y_on_line(double x, double tau) { return (2 * x - 1) / (1 - 3 * tau); }

/// Inverse parametrization: x = y/2 - (3/2) tau y + 1/2.
Rational x_on_line(const Rational& y, const TauValue& tau);
inline double x_on_line(double y, double tau) { return 0.5 * y - 1.5 * tau * y + 0.5; }

/// Smallest y on a tau-line with 1 < x(y) < y; the wedge entry point.
inline double wedge_entry(double tau) { return 1.0 / (1.0 - 3.0 * std::abs(tau)); }

struct LimitingQuotas {
    Rational q2, q3;   // limits of the standard quotas along the tau-line
    bool exceptional;  // true when q3 (equivalently q2) is an integer
};

/// q2 = M(1-3tau)/(3-3tau), q3 = 2M/(3-3tau); their sum is exactly M.
LimitingQuotas limiting_quotas(const TauValue& tau, int M);

/// Inverse of the q3 map: tau = 1 - 2M/(3 q3) for q3 in (M/2, M).
TauValue tau_from_q3(const Rational& q3, int M);

/// D(k) = ((M-k) d(k-1) - k d(M-k-1)) / (d(k-1) + d(M-k-1)).
/// May be negative; the violation interval for floor(q3) = k is empty then.
double d_star(Method m, int M, long long k);
double d_star_clamped(Method m, int M, long long k);

/// Exact sign of d - D(k) for d in [0, 1); avoids floating-point ambiguity at
/// the violation boundary.
int compare_d_to_dstar(Method m, int M, long long k, const Rational& d);

struct IntervalDecomposition {
    double d_star;         // end of the violating interval I1 = [0, d*)
    double d_double_star;  // end of I2; located by bisection on the engine
};

/// Splits the fractional part of q3 into the three behavioral intervals.
/// d* comes from the closed form; d** is found to 1e-10 by bisecting the
/// last-seat recipient switch in the two-state engine.
IntervalDecomposition interval_decomposition(Method m, int M, long long k);

/// True iff the tau-line eventually produces a caused-by-nonzero lower
/// violation: k = floor(q3) lies in [ceil(M/2), M-1] and q3 - k < D(k).
/// Throws ExceptionalTau when q3 is an integer.
bool is_ultimately_violatory(Method m, int M, const TauValue& tau);

struct ViolatorySet {
    Method method{};
    int seats = 0;
    std::vector<std::pair<double, double>> intervals; // disjoint, in (-1/3, 1/3)
    double total_length = 0;
};

/// Union over k of (1 - 2M/(3k), 1 - 2M/(3(k + D(k)))) for positive D(k).
ViolatorySet violatory_set(Method m, int M);

struct TauProfile {
    Rational tau;
    int seats = 0;
    double q2_limit = 0;
    double q3_limit = 0;
    long long k = 0;       // floor(q3)
    double d = 0;          // q3 - k
    double d_star = 0;     // D(k) clamped to [0, 1]
    bool exceptional = false;
    bool ultimately_violatory = false;
};

TauProfile tau_profile(Method m, int M, const TauValue& tau);

struct StabilizationScan {
    int exponent = 0;                 // x_hat = 2^exponent
    BigInt x_hat;
    std::vector<int> limit_allocation; // limiting three-state apportionment
    bool violatory = false;            // the limit violates lower quota
};

/// Doubling search for the smallest power-of-two x at which the apportionment
/// of (1, x, y(x,tau)) equals the limiting apportionment and the quota floors
/// have stabilized; re-verified at 2x and 4x. Throws NoStabilization past
/// x = 2^60 and ExceptionalTau for integral q3.
StabilizationScan stabilization_scan(Method m, const TauValue& tau, int M);

} // namespace seats
