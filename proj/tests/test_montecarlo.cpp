#include "doctest.h"

#include "seats/errors.hpp"
#include "seats/montecarlo.hpp"
#include "seats/probability.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace seats;

TEST_CASE("sampler determinism") {
    Sampler a(SamplerSpec::wedge(1e6, 123));
    Sampler b(SamplerSpec::wedge(1e6, 123));
    for (int i = 0; i < 5; ++i) {
        Triple ta = a.next(), tb = b.next();
        CHECK(ta.p2 == tb.p2);
        CHECK(ta.p3 == tb.p3);
        CHECK(ta.p1 == 1.0);
        CHECK(ta.p1 < ta.p2);
        CHECK(ta.p2 < ta.p3);
    }
    Sampler c(SamplerSpec::exp_iid(1.0, 9));
    for (int i = 0; i < 100; ++i) {
        Triple t = c.next();
        CHECK(t.p1 > 0);
        CHECK(t.p1 < t.p2);
        CHECK(t.p2 < t.p3);
    }
}

TEST_CASE("wedge ratio mean matches the ordered-uniform integral") {
    // E[min/max] for two uniforms on (0, h) is 1/2 as h grows
    Sampler s(SamplerSpec::wedge(1e6, 2024));
    double sum = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        Triple t = s.next();
        sum += t.p2 / t.p3;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02)); // +-0.01 absolute
}

TEST_CASE("exponential ratios follow the closed-form density") {
    // chi-square of the (x, y) = (p2/p1, p3/p1) histogram against cell masses
    // integrated from 12/(1+x+y)^3 in closed form
    auto cell_mass = [](double x0, double x1, double y0, double y1) {
        auto antider = [](double x, double y) { return 6.0 / (1.0 + x + y); };
        return (antider(x0, y0) - antider(x0, y1)) - (antider(x1, y0) - antider(x1, y1));
    };

    const double xs[] = {1.0, 1.5, 2.0, 3.0, 5.0};
    const double ys[] = {5.0, 7.0, 10.0, 15.0, 25.0};
    const int nx = 4, ny = 4;

    Sampler s(SamplerSpec::exp_iid(1.0, 77));
    const int n = 100000;
    std::vector<long long> counts(nx * ny, 0);
    long long rest = 0;
    for (int i = 0; i < n; ++i) {
        Triple t = s.next();
        double x = t.p2 / t.p1, y = t.p3 / t.p1;
        bool placed = false;
        for (int a = 0; a < nx && !placed; ++a)
            for (int b = 0; b < ny && !placed; ++b)
                if (xs[a] <= x && x < xs[a + 1] && ys[b] <= y && y < ys[b + 1]) {
                    ++counts[a * ny + b];
                    placed = true;
                }
        if (!placed) ++rest;
    }

    double chi2 = 0, mass_rest = 1.0;
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) {
            double p = cell_mass(xs[a], xs[a + 1], ys[b], ys[b + 1]);
            mass_rest -= p;
            double expected = p * n;
            double diff = counts[a * ny + b] - expected;
            chi2 += diff * diff / expected;
        }
    double diff = rest - mass_rest * n;
    chi2 += diff * diff / (mass_rest * n);

    // 16 interior cells + remainder: dof = 16, 0.1% critical value 39.25
    CHECK(chi2 < 39.25);
}

TEST_CASE("estimates are reproducible and thread-count invariant") {
    auto spec = SamplerSpec::wedge(1e6, 4242);
    EstimateOptions serial{.threads = 1};
    EstimateOptions parallel{.threads = 4};
    auto a = estimate_violation_prob(Method::ModifiedJefferson, 10, spec, 20000, serial);
    auto b = estimate_violation_prob(Method::ModifiedJefferson, 10, spec, 20000, parallel);
    CHECK(a.hits == b.hits);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.ci_low == b.ci_low);
    CHECK(a.ci_high == b.ci_high);
    auto c = estimate_violation_prob(Method::ModifiedJefferson, 10, spec, 20000, serial);
    CHECK(a.hits == c.hits);
}

TEST_CASE("estimate matches the analytic probability") {
    auto est = estimate_violation_prob(Method::ModifiedJefferson, 10,
                                       SamplerSpec::wedge(1e6, kDefaultSeed), 100000);
    CHECK(est.p_hat == doctest::Approx(1.0 / 9.0).epsilon(0.05));
    CHECK(est.ci_low <= 1.0 / 9.0);
    CHECK(est.ci_high >= 1.0 / 9.0);
    CHECK(est.ci_low <= est.p_hat);
    CHECK(est.p_hat <= est.ci_high);

    CHECK_THROWS_AS(
        estimate_violation_prob(Method::Adams, 10, SamplerSpec::wedge(), 0),
        InsufficientSamples);
}

TEST_CASE("wilson interval stays ordered") {
    EstimateOptions wilson{.threads = 2, .wilson = true};
    auto est = estimate_violation_prob(Method::Dean, 10, SamplerSpec::exp_iid(1.0, 7),
                                       20000, wilson);
    CHECK(est.ci_low <= est.p_hat);
    CHECK(est.p_hat <= est.ci_high);
    CHECK(est.ci_low > 0);
}

TEST_CASE("rate invariance of the exponential model") {
    double analytic = integral_probability(Method::HuntingtonHill, 5,
                                           DensitySpec::exp_iid()).value;
    for (double lambda : {0.5, 1.0, 2.0}) {
        auto est = estimate_violation_prob(Method::HuntingtonHill, 5,
                                           SamplerSpec::exp_iid(lambda, 99), 30000);
        CHECK(est.ci_low <= analytic);
        CHECK(analytic <= est.ci_high);
    }
}

TEST_CASE("adams integral lower bound vs monte carlo") {
    double bound = integral_probability(Method::Adams, 10, DensitySpec::exp_iid()).value;
    auto est = estimate_violation_prob(Method::Adams, 10,
                                       SamplerSpec::exp_iid(1.0, 1234), 50000);
    double sigma = std::sqrt(est.p_hat * (1 - est.p_hat) / est.n);
    CHECK(bound <= est.p_hat + 2 * sigma);
}

TEST_CASE("tau uniformity KS statistic") {
    const long long n = 100000;
    double s = std::sqrt(static_cast<double>(n));
    CHECK(tau_uniformity_ks(SamplerSpec::wedge(1e6, kDefaultSeed), n) * s <
          kKs1PercentCritical);
    // small wedge: the 1/(3y) term is material and uniformity fails
    CHECK(tau_uniformity_ks(SamplerSpec::wedge(1.01, kDefaultSeed), 20000) *
              std::sqrt(20000.0) > 10.0);
}

TEST_CASE("exponential ratio p2/p3 follows its exact order-statistic law") {
    // Renyi representation: E[exp(-s E2)] = 6/((3+s)(2+s)) gives
    // P(p2/p3 <= r) = 6r^2/((2r+1)(r+1)). This is not Uniform(0,1), so tau
    // under exponential sampling is not Uniform(-1/3,1/3) either.
    Sampler s(SamplerSpec::exp_iid(1.0, 31337));
    const int n = 100000;
    std::vector<double> ratios(n);
    for (int i = 0; i < n; ++i) {
        Triple t = s.next();
        ratios[i] = t.p2 / t.p3;
    }
    auto cdf = [](double r) { return 6 * r * r / ((2 * r + 1) * (r + 1)); };
    for (double r : {0.25, 0.5, 0.75}) {
        double emp = static_cast<double>(std::count_if(ratios.begin(), ratios.end(),
                                                       [&](double v) { return v <= r; })) / n;
        CHECK(emp == doctest::Approx(cdf(r)).epsilon(0.02));
    }
    // and the tau KS statistic against the uniform is correspondingly large
    double ks = tau_uniformity_ks(SamplerSpec::exp_iid(1.0, kDefaultSeed), 20000);
    CHECK(ks * std::sqrt(20000.0) > 10.0);
}
