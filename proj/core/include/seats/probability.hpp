#pragma once

#include "seats/method.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seats {

enum class DensityKind {
    UniformWedgeAsymptotic, // limiting uniform on {1 < x < y}; no pointwise density
    ExpIID,                 // ratios of sorted iid exponentials
    Dirichlet111,           // Dir(1,1,1); same ratio density as ExpIID
};

struct DensitySpec {
    DensityKind kind = DensityKind::ExpIID;
    double lambda = 1.0; // sampling rate for ExpIID; the ratio density is rate-free

    static DensitySpec uniform_wedge() { return {DensityKind::UniformWedgeAsymptotic, 0}; }
    static DensitySpec exp_iid(double lambda = 1.0) { return {DensityKind::ExpIID, lambda}; }
    static DensitySpec dirichlet111() { return {DensityKind::Dirichlet111, 0}; }
};

std::string_view density_name(const DensitySpec& d);

/// Joint density of the reduced ratios (x, y) = (p2/p1, p3/p1) for sorted
/// samples: 12/(1+x+y)^3 for both ExpIID and Dirichlet111. Throws OutOfWedge
/// outside 1 < x < y and UnsupportedDensity for the asymptotic-uniform kind.
double density_eval(const DensitySpec& density, double x, double y);

enum class ProbabilityMode { ExactSum, ClosedForm, Limit, Integral, MonteCarlo };

std::string_view to_string(ProbabilityMode mode);

struct ProbabilityResult {
    Method method{};
    int seats = 0; // 0 for M -> infinity limits
    double value = 0;
    ProbabilityMode mode = ProbabilityMode::ExactSum;
    bool lower_bound_only = false;
    double tol = 0;
    std::string density; // set for Integral mode
    // ExactSum: (k, summand). Integral: (subinterval lower tau, contribution).
    std::vector<std::pair<double, double>> contributions;
};

/// Probability of a caused-by-nonzero lower violation under the asymptotic
/// uniform distribution: sum over k of M(1/k - 1/(k + D(k))) with negative
/// D clamped away. Methods without the nonzero guarantee are rejected.
ProbabilityResult exact_probability(Method m, int M);

/// The Modified Jefferson closed form 1/(M-1).
ProbabilityResult jefferson_closed_form(int M);

/// M -> infinity limits: 2 ln 2 - 1 for Adams, 0 for Modified Jefferson,
/// ln 2 - 1/2 for Huntington-Hill, Modified Webster and Dean.
ProbabilityResult limit_probability(Method m);

/// Violation probability under a general ratio density: the double integral
/// over tau-lines of the density mass inside the violation window
/// (y_floor, y_max). Exact semantics for Huntington-Hill, Dean and the two
/// modified methods; for Adams the result is only a lower bound. The tau
/// domain is split at the breakpoints where floor(q3) changes and each piece
/// is integrated adaptively to `tol`.
ProbabilityResult integral_probability(Method m, int M, const DensitySpec& density,
                                       double tol = 1e-6);

/// Maximum discrepancy between the closed-form inner integral and its
/// quadrature evaluation observed during the last integral_probability call
/// on this thread. Exposed for the built-in self-check.
double last_inner_selfcheck_error();

} // namespace seats
