#include "seats/tau.hpp"

#include "seats/errors.hpp"
#include "seats/instance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace seats {

namespace {

const Rational kThird = Rational(1, 3);

} // namespace

TauValue::TauValue(Rational v) : value_(std::move(v)) {
    if (value_ >= kThird || value_ <= -kThird)
        throw OutOfRange("tau must lie strictly inside (-1/3, 1/3)");
}

TauValue tau_of(const Rational& a, const Rational& b, const Rational& c) {
    std::array<Rational, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2] || v[0] <= 0)
        throw std::invalid_argument("tau requires three distinct positive values");
    Rational mean = (v[0] + v[1] + v[2]) / 3;
    return TauValue((mean - v[1]) / v[2]);
}

double tau_of(double a, double b, double c) {
    std::array<double, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return ((v[0] + v[1] + v[2]) / 3.0 - v[1]) / v[2];
}

Rational y_on_line(const Rational& x, const TauValue& tau) {
    if (x <= 1) throw OutOfWedge("x must exceed 1");
    Rational y = (2 * x - 1) / (1 - 3 * tau.value());
    if (y <= x) throw OutOfWedge("tau-line leaves the wedge at this x");
    return y;
}

Rational x_on_line(const Rational& y, const TauValue& tau) {
    Rational x = y / 2 - Rational(3, 2) * tau.value() * y + Rational(1, 2);
    if (x <= 1 || x >= y) throw OutOfWedge("tau-line leaves the wedge at this y");
    return x;
}

LimitingQuotas limiting_quotas(const TauValue& tau, int M) {
    Rational q3 = Rational(2 * M) / (3 - 3 * tau.value());
    Rational q2 = Rational(M) - q3;
    bool exceptional = is_integer(q3);
    return {std::move(q2), std::move(q3), exceptional};
}

TauValue tau_from_q3(const Rational& q3, int M) {
    if (2 * q3 <= M || q3 >= M)
        throw OutOfRange("q3 must lie strictly inside (M/2, M)");
    return TauValue(Rational(1) - Rational(2 * M) / (3 * q3));
}

double d_star(Method m, int M, long long k) {
    if (k < 1 || k > M - 1) throw std::invalid_argument("k must lie in [1, M-1]");
    double da = divisor_value(m, k - 1);
    double db = divisor_value(m, M - k - 1);
    return (static_cast<double>(M - k) * da - static_cast<double>(k) * db) / (da + db);
}

double d_star_clamped(Method m, int M, long long k) {
    return std::clamp(d_star(m, M, k), 0.0, 1.0);
}

int compare_d_to_dstar(Method m, int M, long long k, const Rational& d) {
    // sign(d - D(k)) == sign((k+d) d(M-k-1) - (M-k-d) d(k-1)); all factors >= 0
    return compare_scaled(m, Rational(k) + d, M - k - 1, Rational(M - k) - d, k - 1);
}

namespace {

// Two-state apportionment at q3 = k + d: does the big state reach its ceiling?
bool big_state_gets_ceiling(Method m, int M, long long k, const Rational& d) {
    Rational big = Rational(k) + d;
    Rational small = Rational(M) - big;
    Apportionment a = apportion(m, std::vector<Rational>{small, big}, M);
    return a.allocation[1] == k + 1;
}

bool probe_ceiling(Method m, int M, long long k, double d) {
    for (double nudge : {0.0, 1e-13, -1e-13, 3e-13}) {
        try {
            return big_state_gets_ceiling(m, M, k, Rational(d + nudge));
        } catch (const TieDetected&) {
            continue; // boundary hit: retry a hair away
        }
    }
    throw std::logic_error("persistent tie while probing interval boundary");
}

} // namespace

IntervalDecomposition interval_decomposition(Method m, int M, long long k) {
    if (k < (M + 1) / 2 || k > M - 1)
        throw std::invalid_argument("k must lie in [ceil(M/2), M-1]");
    double ds = d_star_clamped(m, M, k);
    if (ds >= 1.0) return {1.0, 1.0};

    double lo = ds, hi = 1.0;
    if (!probe_ceiling(m, M, k, hi - 1e-12)) return {ds, 1.0};   // I3 empty
    if (probe_ceiling(m, M, k, lo + 1e-12)) return {ds, ds};     // I2 empty
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (probe_ceiling(m, M, k, mid))
            hi = mid;
        else
            lo = mid;
    }
    return {ds, 0.5 * (lo + hi)};
}

bool is_ultimately_violatory(Method m, int M, const TauValue& tau) {
    LimitingQuotas lq = limiting_quotas(tau, M);
    if (lq.exceptional) throw ExceptionalTau("q3 is an integer at this tau");
    long long k = to_ll(floor_rat(lq.q3));
    if (k < (M + 1) / 2 || k > M - 1) return false;
    Rational d = lq.q3 - Rational(k);
    return compare_d_to_dstar(m, M, k, d) < 0;
}

ViolatorySet violatory_set(Method m, int M) {
    if (M < 3) throw std::invalid_argument("need M >= 3");
    if (!supported_for_probability(m))
        throw UnsupportedMethod("violatory set requires a nonzero-allocation method");
    ViolatorySet vs;
    vs.method = m;
    vs.seats = M;
    for (long long k = (M + 1) / 2; k <= M - 1; ++k) {
        double dk = d_star_clamped(m, M, k);
        if (dk <= 0) continue;
        double lo = 1.0 - 2.0 * M / (3.0 * k);
        double hi = 1.0 - 2.0 * M / (3.0 * (k + dk));
        vs.intervals.emplace_back(lo, hi);
        vs.total_length += hi - lo;
    }
    return vs;
}

TauProfile tau_profile(Method m, int M, const TauValue& tau) {
    LimitingQuotas lq = limiting_quotas(tau, M);
    TauProfile p;
    p.tau = tau.value();
    p.seats = M;
    p.q2_limit = to_double(lq.q2);
    p.q3_limit = to_double(lq.q3);
    p.k = to_ll(floor_rat(lq.q3));
    p.d = to_double(lq.q3 - Rational(p.k));
    p.d_star = (p.k >= 1 && p.k <= M - 1) ? d_star_clamped(m, M, p.k) : 0.0;
    p.exceptional = lq.exceptional;
    p.ultimately_violatory = lq.exceptional ? false : is_ultimately_violatory(m, M, tau);
    return p;
}

StabilizationScan stabilization_scan(Method m, const TauValue& tau, int M) {
    if (!guarantees_nonzero(m))
        throw UnsupportedMethod("stabilization scan requires a nonzero-allocation method");
    LimitingQuotas lq = limiting_quotas(tau, M);
    if (lq.exceptional) throw ExceptionalTau("q3 is an integer at this tau");

    // Limiting apportionment: one seat for state 1, M-1 seats among (q2, q3).
    Apportionment tail = apportion(m, std::vector<Rational>{lq.q2, lq.q3}, M - 1);
    std::vector<int> limit{1, tail.allocation[0], tail.allocation[1]};

    // Violation route independent of D(k): in the M-seat two-state run, the
    // last seat's recipient drops to its floor minus the stolen seat.
    Apportionment full = apportion(m, std::vector<Rational>{lq.q2, lq.q3}, M);
    int last_state = full.order.back().state;
    long long floor_last =
        to_ll(floor_rat(last_state == 0 ? lq.q2 : lq.q3));
    bool violatory = full.allocation[last_state] == floor_last;

    long long floor_q2 = to_ll(floor_rat(lq.q2));
    long long floor_q3 = to_ll(floor_rat(lq.q3));

    const Rational one(1);
    auto matches_at = [&](int j) {
        Rational x = Rational(BigInt(1) << j);
        if ((1 + 3 * tau.value()) * x <= 1) return false; // outside the wedge
        Rational y = (2 * x - 1) / (1 - 3 * tau.value());
        if (y <= x) return false;
        std::vector<Rational> pops{one, x, y};
        QuotaVector q = standard_quotas(pops, M);
        if (q.floors[0] != 0 || q.floors[1] != floor_q2 || q.floors[2] != floor_q3)
            return false;
        try {
            return apportion(m, pops, M).allocation == limit;
        } catch (const TieDetected&) {
            return false;
        }
    };

    for (int j = 1; j <= 60; ++j) {
        if (matches_at(j) && matches_at(j + 1) && matches_at(j + 2)) {
            StabilizationScan scan;
            scan.exponent = j;
            scan.x_hat = BigInt(1) << j;
            scan.limit_allocation = limit;
            scan.violatory = violatory;
            return scan;
        }
    }
    throw NoStabilization("no stabilization below x = 2^60");
}

} // namespace seats
