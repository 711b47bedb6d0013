#include "doctest.h"

#include "seats/engine.hpp"
#include "seats/errors.hpp"
#include "seats/fast_engine.hpp"
#include "seats/instance.hpp"
#include "seats/method.hpp"
#include "seats/montecarlo.hpp"
#include "seats/violation.hpp"

#include <random>

using namespace seats;

namespace {

PopulationInstance inst3(long long a, long long b, long long c, int M) {
    return PopulationInstance({Rational(a), Rational(b), Rational(c)}, M);
}

} // namespace

TEST_CASE("divisor values") {
    CHECK(divisor_value(Method::Adams, 3) == 3.0);
    CHECK(divisor_rational(Method::Dean, 2) == Rational(12, 5));
    CHECK(divisor_value(Method::ModifiedJefferson, 0) == 0.0);
    CHECK(divisor_rational(Method::ModifiedJefferson, 4) == Rational(5));
    CHECK(divisor_rational(Method::Webster, 2) == Rational(5, 2));
    CHECK(divisor_value(Method::HuntingtonHill, 3) == doctest::Approx(std::sqrt(12.0)));
    CHECK(divisor_value(Method::HuntingtonHill, 0) == 0.0);
    CHECK_THROWS_AS(divisor_rational(Method::HuntingtonHill, 1), UnsupportedMethod);

    for (Method m : kAllMethods) {
        // strictly increasing on s >= 0
        for (int s = 0; s < 30; ++s)
            CHECK(divisor_value(m, s) < divisor_value(m, s + 1));
        CHECK(guarantees_nonzero(m) == (divisor_value(m, 0) == 0.0));
    }
}

TEST_CASE("method names round-trip") {
    for (Method m : kAllMethods) {
        auto parsed = method_from_name(method_name(m));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == m);
    }
    CHECK(method_from_name("huntington-hill") == Method::HuntingtonHill);
    CHECK(!method_from_name("hamilton").has_value());
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(inst3(1, 1, 2, 5), std::invalid_argument);    // duplicate
    CHECK_THROWS_AS(inst3(0, 1, 2, 5), std::invalid_argument);    // nonpositive
    CHECK_THROWS_AS(inst3(1, 2, 3, 2), std::invalid_argument);    // M < n
    CHECK_THROWS_AS(PopulationInstance({Rational(1)}, 5), std::invalid_argument);

    auto inst = PopulationInstance::from_strings({"6.25", "1", "115"}, 10);
    CHECK(inst.populations[0] == Rational(25, 4));
    CHECK(inst.ascending_order() == std::vector<int>{1, 0, 2});
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1.25") == Rational(5, 4));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("1e3") == Rational(1000));
    CHECK(parse_rational("2.5e-1") == Rational(1, 4));
    CHECK(parse_rational("7/9") == Rational(7, 9));
    CHECK(!parse_rational("abc").has_value());
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("").has_value());
}

TEST_CASE("standard quotas are exact") {
    auto qv = standard_quotas(inst3(1, 2, 3, 6));
    CHECK(qv.quotas == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});

    auto qv2 = standard_quotas(inst3(1, 100, 1990, 10));
    CHECK(qv2.quotas[0] == Rational(10, 2091));
    CHECK(qv2.quotas[1] == Rational(1000, 2091));
    CHECK(qv2.quotas[2] == Rational(19900, 2091));
    CHECK(qv2.quotas[0] + qv2.quotas[1] + qv2.quotas[2] == Rational(10));
    CHECK(qv2.floors == std::vector<long long>{0, 0, 9});
    CHECK(qv2.ceilings == std::vector<long long>{1, 1, 10});

    // scaling leaves quotas unchanged
    auto qv3 = standard_quotas(inst3(2, 4, 6, 6));
    CHECK(qv3.quotas == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
}

TEST_CASE("apportionment examples") {
    auto a1 = apportion(Method::Adams, inst3(1, 2, 3, 3));
    CHECK(a1.allocation == std::vector<int>{1, 1, 1});

    auto a2 = apportion(Method::ModifiedJefferson, inst3(1, 100, 1990, 10));
    CHECK(a2.allocation == std::vector<int>{1, 1, 8});
    CHECK(a2.order.size() == 10);
    CHECK(a2.order.front() == SeatAssignment{0, 1});
    CHECK(a2.order.back() == SeatAssignment{2, 8});

    auto a3 = apportion(Method::Webster,
                        PopulationInstance({Rational(100), Rational(1990)}, 10));
    CHECK(a3.allocation == std::vector<int>{0, 10});

    // seat conservation and the nonzero guarantee
    for (Method m : kAllMethods) {
        auto a = apportion(m, inst3(7, 19, 41, 12));
        int total = 0;
        for (int s : a.allocation) total += s;
        CHECK(total == 12);
        if (guarantees_nonzero(m))
            for (int s : a.allocation) CHECK(s >= 1);
    }
}

TEST_CASE("modified apportionment") {
    auto inst = inst3(1, 100, 1990, 10);
    auto mod = modified_apportion(Method::ModifiedJefferson, inst);
    CHECK(mod.allocation == std::vector<int>{1, 1, 8});
    CHECK(mod.allocation == apportion(Method::ModifiedJefferson, inst).allocation);

    auto mod2 = modified_apportion(Method::Adams, inst3(1, 2, 3, 3));
    CHECK(mod2.allocation == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(modified_apportion(Method::Jefferson, inst), UnsupportedMethod);

    // unordered input: the smallest state still gets the pinned seat
    PopulationInstance shuffled({Rational(1990), Rational(1), Rational(100)}, 10);
    auto mod3 = modified_apportion(Method::ModifiedJefferson, shuffled);
    CHECK(mod3.allocation == std::vector<int>{8, 1, 1});
}

TEST_CASE("tie detection") {
    PopulationInstance two({Rational(1), Rational(2)}, 2);
    CHECK_THROWS_AS(apportion(Method::Jefferson, two), TieDetected);
    try {
        apportion(Method::Jefferson, two);
    } catch (const TieDetected& t) {
        CHECK(t.states == std::vector<int>{0, 1});
    }
}

TEST_CASE("violation classification") {
    auto r1 = classify_violation(Method::ModifiedJefferson, inst3(1, 100, 1990, 10));
    CHECK(r1.status == ViolationStatus::Lower);
    CHECK(r1.offending_states == std::vector<int>{2});
    CHECK(r1.cause == ViolationCause::CausedByNonzero);

    auto r2 = classify_violation(Method::Adams, inst3(1, 2, 3, 3));
    CHECK(r2.status == ViolationStatus::None);
    CHECK(r2.cause == ViolationCause::NotApplicable);

    auto r3 = classify_violation(Method::Webster,
                                 PopulationInstance({Rational(100), Rational(1990)}, 10));
    CHECK(r3.status == ViolationStatus::None);
}

TEST_CASE("modified jefferson keeps jefferson's upper violations") {
    // The guarantee only removes seats from non-guaranteed states, so upper
    // violations are the base method's own doing and classify as intrinsic
    // even when the modified method agrees with A (a3 = 23 > ceil(q3) = 22).
    auto inst =
        PopulationInstance::from_strings({"0.265546", "0.923705", "3.13529"}, 30);
    auto q = standard_quotas(inst);
    CHECK(q.ceilings == std::vector<long long>{2, 7, 22});

    auto a = apportion(Method::ModifiedJefferson, inst);
    CHECK(a.allocation == std::vector<int>{1, 6, 23});
    CHECK(a.allocation == modified_apportion(Method::ModifiedJefferson, inst).allocation);

    auto rep = classify_violation(Method::ModifiedJefferson, inst);
    CHECK(rep.status == ViolationStatus::Upper);
    CHECK(rep.offending_states == std::vector<int>{2});
    CHECK(rep.cause == ViolationCause::Intrinsic);
}

TEST_CASE("criteria test") {
    auto qv = standard_quotas(inst3(1, 100, 1990, 10));
    CHECK(criteria_test(Method::ModifiedJefferson, qv, 10));

    auto integral = standard_quotas(inst3(1, 2, 3, 6));
    for (Method m : kGuaranteeMethods) CHECK(!criteria_test(m, integral, 6));

    CHECK_THROWS_AS(criteria_test(Method::Jefferson, qv, 10), UnsupportedMethod);
    CHECK_THROWS_AS(criteria_test(Method::Webster, qv, 10), UnsupportedMethod);
}

TEST_CASE("scale and permutation invariance") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> pops{Rational(1 + rng() % 10000, 1 + rng() % 100),
                                   Rational(1 + rng() % 10000, 1 + rng() % 100),
                                   Rational(1 + rng() % 10000, 1 + rng() % 100)};
        if (pops[0] == pops[1] || pops[1] == pops[2] || pops[0] == pops[2]) continue;
        int M = 3 + static_cast<int>(rng() % 20);
        Method m = kAllMethods[rng() % 7];
        Rational lambda(1 + rng() % 500, 1 + rng() % 500);
        try {
            auto base = apportion(m, pops, M).allocation;
            std::vector<Rational> scaled;
            for (const auto& p : pops) scaled.push_back(p * lambda);
            CHECK(apportion(m, scaled, M).allocation == base);

            std::vector<Rational> rotated{pops[2], pops[0], pops[1]};
            auto rot = apportion(m, rotated, M).allocation;
            CHECK(rot == std::vector<int>{base[2], base[0], base[1]});
        } catch (const TieDetected&) {
            continue;
        }
    }
}

TEST_CASE("fast engine matches the exact engine") {
    std::mt19937_64 rng(11);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    int checked = 0;
    for (int i = 0; i < 600; ++i) {
        double x = 1 + u() * 999, y = 1 + u() * 999;
        if (x > y) std::swap(x, y);
        double pops[3] = {1.0, x, y};
        int M = 5 + static_cast<int>(rng() % 30);
        Method m = kGuaranteeMethods[rng() % 5];
        fast::Outcome fastout = fast::classify_caused(m, pops, 3, M);
        if (fastout.suspect) continue;
        auto inst = PopulationInstance::from_doubles({1.0, x, y}, M);
        bool exact = classify_violation(m, inst).cause == ViolationCause::CausedByNonzero;
        CHECK(fastout.caused == exact);
        ++checked;
    }
    CHECK(checked > 500);
}
