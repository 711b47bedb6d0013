#include "seats/probability.hpp"

#include "seats/errors.hpp"
#include "seats/tau.hpp"
#include "seats/thresholds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace seats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSelfCheckTol = 1e-8;

thread_local double g_selfcheck_error = 0.0;

void require_probability_method(Method m) {
    if (!supported_for_probability(m))
        throw UnsupportedMethod(std::string(method_name(m)) +
                                " lacks the nonzero guarantee; no probability semantics");
}

// ---- inner integral along a tau-line ----
//
// The integrand in y is f(x(y,tau), y) * (3/2) y. For the exponential-ratio
// density f = 12/(1+x+y)^3 and 1+x+y = (3/2)((1-tau) y + 1), the tail mass
// from z to infinity has the closed form below.

double inner_tail_closed(double tau, double z) {
    double a = 1.0 - tau;
    double u = a * z + 1.0;
    return (16.0 / 3.0) / (a * a) * (1.0 / u - 0.5 / (u * u));
}

double inner_closed(double tau, double y_lo, double y_hi) {
    double v = inner_tail_closed(tau, y_lo);
    if (y_hi != kInf) v -= inner_tail_closed(tau, y_hi);
    return v;
}

// Quadrature route used as the self-check and for densities without a closed
// tail: substitute t = 1/y so the infinite tail maps to t in (0, 1/y_lo].
double inner_quadrature(const DensitySpec& density, double tau, double y_lo,
                        double y_hi) {
    auto wedge_density = [&](double x, double y) {
        if (!(1.0 < x && x < y)) return 0.0;
        return density_eval(density, x, y);
    };
    auto g = [&](double t) {
        double y = 1.0 / t;
        return wedge_density(x_on_line(y, tau), y) * 1.5 * y / (t * t);
    };
    double t_lo = y_hi == kInf ? 0.0 : 1.0 / y_hi;
    double t_hi = 1.0 / y_lo;
    if (t_hi <= t_lo) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, t_lo, t_hi, 10, 1e-12);
}

struct Piece {
    double lo, hi;
    long long k;
    bool violatory;
};

// The integrand over tau for one piece (floor(q3) = k constant).
double tau_integrand(Method m, int M, const DensitySpec& density, const Piece& piece,
                     double tau, bool self_check) {
    FloorThresholds ft = floor_threshold_at(tau, M, M - piece.k - 1, piece.k);
    double y_lo = std::max(ft.y_floor, wedge_entry(tau));
    double y_hi;
    if (piece.violatory) {
        y_hi = kInf;
    } else {
        double ys = y_star_at(m, tau, M, piece.k);
        y_hi = std::max(ft.y_floor, ys);
        if (y_hi <= y_lo) return 0.0;
    }
    double closed = inner_closed(tau, y_lo, y_hi);
    if (self_check) {
        double quad = inner_quadrature(density, tau, y_lo, y_hi);
        g_selfcheck_error = std::max(g_selfcheck_error, std::abs(closed - quad));
        if (g_selfcheck_error > kSelfCheckTol)
            throw std::logic_error("inner integral self-check failed");
        return closed;
    }
    return inner_quadrature(density, tau, y_lo, y_hi);
}

std::vector<Piece> tau_pieces(Method m, int M) {
    std::vector<Piece> pieces;
    for (long long k = M / 2; k <= M - 1; ++k) {
        double lo = std::max(-1.0 / 3.0, 1.0 - 2.0 * M / (3.0 * k));
        double hi = 1.0 - 2.0 * M / (3.0 * (k + 1));
        if (hi <= lo) continue;
        double dk = (k >= 1) ? d_star_clamped(m, M, k) : 0.0;
        if (dk <= 0.0) {
            pieces.push_back({lo, hi, k, false});
        } else {
            double tv = 1.0 - 2.0 * M / (3.0 * (k + dk));
            tv = std::clamp(tv, lo, hi);
            if (tv > lo) pieces.push_back({lo, tv, k, true});
            if (hi > tv) pieces.push_back({tv, hi, k, false});
        }
    }
    return pieces;
}

} // namespace

std::string_view density_name(const DensitySpec& d) {
    switch (d.kind) {
    case DensityKind::UniformWedgeAsymptotic: return "uniform-wedge";
    case DensityKind::ExpIID: return "exp-iid";
    case DensityKind::Dirichlet111: return "dirichlet111";
    }
    return "?";
}

std::string_view to_string(ProbabilityMode mode) {
    switch (mode) {
    case ProbabilityMode::ExactSum: return "exact-sum";
    case ProbabilityMode::ClosedForm: return "closed-form";
    case ProbabilityMode::Limit: return "limit";
    case ProbabilityMode::Integral: return "integral";
    case ProbabilityMode::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

double density_eval(const DensitySpec& density, double x, double y) {
    if (density.kind == DensityKind::UniformWedgeAsymptotic)
        throw UnsupportedDensity("the asymptotic uniform has no pointwise density; "
                                 "use exact_probability");
    if (!(1.0 < x && x < y)) throw OutOfWedge("density requires 1 < x < y");
    double s = 1.0 + x + y;
    return 12.0 / (s * s * s);
}

ProbabilityResult exact_probability(Method m, int M) {
    require_probability_method(m);
    if (M < 3) throw std::invalid_argument("need M >= 3");

    ProbabilityResult r;
    r.method = m;
    r.seats = M;
    r.mode = ProbabilityMode::ExactSum;
    for (long long k = (M + 1) / 2; k <= M - 1; ++k) {
        double dk = d_star_clamped(m, M, k);
        double term = dk > 0 ? M * (1.0 / k - 1.0 / (k + dk)) : 0.0;
        r.contributions.emplace_back(static_cast<double>(k), term);
        r.value += term;
    }
    return r;
}

ProbabilityResult jefferson_closed_form(int M) {
    if (M < 3) throw std::invalid_argument("need M >= 3");
    ProbabilityResult r;
    r.method = Method::ModifiedJefferson;
    r.seats = M;
    r.mode = ProbabilityMode::ClosedForm;
    r.value = 1.0 / (M - 1);
    return r;
}

ProbabilityResult limit_probability(Method m) {
    require_probability_method(m);
    ProbabilityResult r;
    r.method = m;
    r.seats = 0;
    r.mode = ProbabilityMode::Limit;
    switch (m) {
    case Method::Adams:
        r.value = 2.0 * std::log(2.0) - 1.0;
        break;
    case Method::ModifiedJefferson:
        r.value = 0.0;
        break;
    default:
        r.value = std::log(2.0) - 0.5;
        break;
    }
    return r;
}

ProbabilityResult integral_probability(Method m, int M, const DensitySpec& density,
                                       double tol) {
    require_probability_method(m);
    if (M < 3) throw std::invalid_argument("need M >= 3");
    if (density.kind == DensityKind::UniformWedgeAsymptotic)
        throw UnsupportedDensity("finite-M semantics under the asymptotic uniform are "
                                 "given by exact_probability, not the integral");

    // The exponential-ratio density admits a closed inner tail; we integrate
    // that and verify it against quadrature at every outer evaluation.
    const bool closed_inner = density.kind == DensityKind::ExpIID ||
                              density.kind == DensityKind::Dirichlet111;
    g_selfcheck_error = 0.0;

    ProbabilityResult r;
    r.method = m;
    r.seats = M;
    r.mode = ProbabilityMode::Integral;
    r.lower_bound_only = m == Method::Adams;
    r.tol = tol;
    r.density = density_name(density);

    for (const Piece& piece : tau_pieces(m, M)) {
        auto f = [&](double tau) {
            return tau_integrand(m, M, density, piece, tau, closed_inner);
        };
        double err = 0;
        double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            f, piece.lo, piece.hi, 15, std::min(tol, 1e-9), &err);
        r.contributions.emplace_back(piece.lo, v);
        r.value += v;
    }
    return r;
}

double last_inner_selfcheck_error() { return g_selfcheck_error; }

} // namespace seats
