#include "doctest.h"

#include "seats/errors.hpp"
#include "seats/probability.hpp"
#include "seats/tau.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <random>

using namespace seats;

TEST_CASE("exact probability sums") {
    CHECK(exact_probability(Method::ModifiedJefferson, 10).value ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(exact_probability(Method::Adams, 10).value ==
          doctest::Approx(0.3801587301587299).epsilon(1e-12));
    CHECK(exact_probability(Method::HuntingtonHill, 50).value ==
          doctest::Approx(0.209381).epsilon(1e-5));

    auto r = exact_probability(Method::Dean, 20);
    double sum = 0;
    for (auto& [k, term] : r.contributions) {
        CHECK(term >= 0);
        sum += term;
    }
    CHECK(sum == doctest::Approx(r.value).epsilon(1e-15));
    CHECK(r.value >= 0);
    CHECK(r.value <= 1);

    CHECK_THROWS_AS(exact_probability(Method::Jefferson, 10), UnsupportedMethod);
    CHECK_THROWS_AS(exact_probability(Method::Adams, 2), std::invalid_argument);
}

TEST_CASE("jefferson closed form") {
    CHECK(jefferson_closed_form(10).value == doctest::Approx(1.0 / 9.0));
    CHECK(jefferson_closed_form(3).value == doctest::Approx(0.5));
    for (int M = 3; M <= 100; ++M)
        CHECK(std::abs(exact_probability(Method::ModifiedJefferson, M).value -
                       jefferson_closed_form(M).value) <= 1e-12);
}

TEST_CASE("limit probabilities") {
    CHECK(limit_probability(Method::Adams).value ==
          doctest::Approx(0.3862943611198906).epsilon(1e-14));
    CHECK(limit_probability(Method::ModifiedJefferson).value == 0.0);
    CHECK(limit_probability(Method::Dean).value ==
          doctest::Approx(0.1931471805599453).epsilon(1e-14));
    CHECK(limit_probability(Method::HuntingtonHill).value ==
          doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-14));
    CHECK_THROWS_AS(limit_probability(Method::Webster), UnsupportedMethod);
}

TEST_CASE("density evaluation") {
    auto exp_iid = DensitySpec::exp_iid();
    CHECK(density_eval(exp_iid, 2.0, 3.0) == doctest::Approx(12.0 / 216.0));
    CHECK_THROWS_AS(density_eval(exp_iid, 0.5, 3.0), OutOfWedge);
    CHECK_THROWS_AS(density_eval(exp_iid, 3.0, 2.0), OutOfWedge);
    CHECK_THROWS_AS(density_eval(DensitySpec::uniform_wedge(), 2.0, 3.0),
                    UnsupportedDensity);

    // Dirichlet(1,1,1) induces the same ratio density
    std::mt19937_64 rng(17);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto dir = DensitySpec::dirichlet111();
    for (int i = 0; i < 100; ++i) {
        double x = 1 + u() * 50, y = x + u() * 50 + 1e-9;
        CHECK(density_eval(dir, x, y) == density_eval(exp_iid, x, y));
    }
}

TEST_CASE("density normalizes over the wedge") {
    // quadrature oracle: integrate rho over {1 < x < y}, substituting t = 1/y
    auto density = DensitySpec::exp_iid();
    auto inner = [&](double y) {
        auto f = [&](double x) { return density_eval(density, x, y); };
        return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            f, 1.0, y, 8, 1e-10);
    };
    auto outer = [&](double t) {
        double y = 1.0 / t;
        return inner(y) / (t * t);
    };
    double total = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        outer, 0.0, 1.0, 12, 1e-10);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("integral probability reproduces the analytic table") {
    struct Row { Method m; int M; double want; };
    const Row rows[] = {
        {Method::HuntingtonHill, 5, 0.131},
        {Method::ModifiedJefferson, 5, 0.120},
        {Method::Dean, 10, 0.056},
        {Method::ModifiedWebster, 15, 0.025},
    };
    for (const auto& row : rows) {
        auto r = integral_probability(row.m, row.M, DensitySpec::exp_iid());
        CHECK(std::abs(r.value - row.want) <= 1e-3);
        CHECK(r.mode == ProbabilityMode::Integral);
        CHECK(!r.lower_bound_only);
        CHECK(last_inner_selfcheck_error() <= 1e-8);

        double sum = 0;
        for (auto& [lo, c] : r.contributions) sum += c;
        CHECK(sum == doctest::Approx(r.value).epsilon(1e-12));
    }

    // Dirichlet(1,1,1) gives identical values
    auto a = integral_probability(Method::HuntingtonHill, 5, DensitySpec::exp_iid());
    auto b = integral_probability(Method::HuntingtonHill, 5, DensitySpec::dirichlet111());
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
}

TEST_CASE("adams integral is only a lower bound") {
    auto r = integral_probability(Method::Adams, 10, DensitySpec::exp_iid());
    CHECK(r.lower_bound_only);
    CHECK(r.value > 0);
    CHECK(r.value < exact_probability(Method::Adams, 10).value);
}

TEST_CASE("integral rejects unsupported combinations") {
    CHECK_THROWS_AS(
        integral_probability(Method::Jefferson, 10, DensitySpec::exp_iid()),
        UnsupportedMethod);
    CHECK_THROWS_AS(
        integral_probability(Method::Dean, 10, DensitySpec::uniform_wedge()),
        UnsupportedDensity);
}
