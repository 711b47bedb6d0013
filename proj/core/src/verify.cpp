#include "seats/verify.hpp"

#include "seats/engine.hpp"
#include "seats/errors.hpp"
#include "seats/instance.hpp"
#include "seats/probability.hpp"
#include "seats/tau.hpp"
#include "seats/thresholds.hpp"
#include "seats/violation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace seats {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

long long round3(double v) { return std::llround(v * 1000.0); }

struct Row {
    Method method;
    int M;
    double value;
};

// Published Table 1: probability of caused lower violations, 3 decimals.
constexpr int kTable1Seats[] = {10, 20, 50, 100, 500, 1000};
const std::pair<Method, std::array<int, 6>> kTable1[] = {
    {Method::ModifiedJefferson, {111, 53, 20, 10, 2, 1}},
    {Method::Adams, {380, 385, 386, 386, 386, 386}},
    {Method::ModifiedWebster, {235, 213, 201, 197, 194, 194}},
    {Method::HuntingtonHill, {257, 229, 209, 202, 195, 194}},
    {Method::Dean, {278, 244, 218, 207, 197, 195}},
};

// Appendix, exponential-ratio table: analytic column, 3 decimals.
const std::pair<Method, std::array<std::pair<int, int>, 3>> kAppendixExp[] = {
    {Method::HuntingtonHill, {{{5, 131}, {10, 49}, {15, 29}}}},
    {Method::Dean, {{{5, 137}, {10, 56}, {15, 33}}}},
    {Method::ModifiedJefferson, {{{5, 120}, {10, 30}, {15, 13}}}},
    {Method::ModifiedWebster, {{{5, 126}, {10, 43}, {15, 25}}}},
};

constexpr int kAppendixWedgeSeats[] = {10, 20, 50};

std::mt19937_64 check_rng(const VerifyOptions& opts, std::uint64_t salt) {
    return std::mt19937_64(opts.seed ^ splitmix64(salt));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Rotates through the three samplers to vary instance geometry.
Triple mixed_triple(std::vector<Sampler>& samplers, long long i) {
    return samplers[static_cast<size_t>(i % samplers.size())].next();
}

std::vector<Sampler> mixed_samplers(std::uint64_t seed) {
    return {Sampler(SamplerSpec::wedge(1e6, seed)),
            Sampler(SamplerSpec::exp_iid(1.0, splitmix64(seed))),
            Sampler(SamplerSpec::dirichlet111(splitmix64(seed + 1)))};
}

CheckResult finish(CheckResult r, Clock::time_point t0) {
    r.seconds = elapsed(t0);
    return r;
}

} // namespace

CheckResult verify_table1() {
    auto t0 = Clock::now();
    CheckResult r{.name = "table1"};
    int matched = 0, total = 0;
    std::ostringstream bad;
    for (const auto& [method, row] : kTable1) {
        for (int j = 0; j < 6; ++j) {
            ++total;
            double v = exact_probability(method, kTable1Seats[j]).value;
            if (round3(v) == row[j]) {
                ++matched;
            } else {
                bad << ' ' << method_name(method) << "/M=" << kTable1Seats[j]
                    << " got " << format_fixed(v, 6);
            }
        }
    }
    r.pass = matched == total;
    r.details = std::to_string(matched) + "/" + std::to_string(total) +
                " entries match at 3 decimals" + bad.str();
    r = finish(std::move(r), t0);
    if (r.seconds >= 5.0) {
        r.pass = false;
        r.details += " [exceeded 5 s budget]";
    }
    return r;
}

CheckResult verify_jefferson_closed_form() {
    auto t0 = Clock::now();
    CheckResult r{.name = "jefferson-closed-form"};
    double worst = 0;
    for (int M = 3; M <= 500; ++M) {
        double sum = exact_probability(Method::ModifiedJefferson, M).value;
        worst = std::max(worst, std::abs(sum - jefferson_closed_form(M).value));
    }
    r.pass = worst <= 1e-12;
    std::ostringstream os;
    os << "max |sum - 1/(M-1)| = " << worst << " over M in [3,500]";
    r.details = os.str();
    r = finish(std::move(r), t0);
    if (r.seconds >= 1.0) {
        r.pass = false;
        r.details += " [exceeded 1 s budget]";
    }
    return r;
}

CheckResult verify_limits() {
    auto t0 = Clock::now();
    CheckResult r{.name = "limits"};
    bool ok = true;
    std::ostringstream os;
    for (Method m : kGuaranteeMethods) {
        double at1000 = exact_probability(m, 1000).value;
        double limit = limit_probability(m).value;
        double gap = std::abs(at1000 - limit);
        double budget = m == Method::ModifiedJefferson ? 0.0011 : 0.002;
        ok = ok && gap <= budget;
        os << method_name(m) << ":" << format_fixed(gap, 6) << ' ';
    }
    r.pass = ok;
    r.details = "gaps at M=1000: " + os.str();
    r = finish(std::move(r), t0);
    if (r.seconds >= 1.0) {
        r.pass = false;
        r.details += " [exceeded 1 s budget]";
    }
    return r;
}

CheckResult verify_appendix_integrals() {
    auto t0 = Clock::now();
    CheckResult r{.name = "appendix-integrals"};
    int ok = 0, total = 0;
    std::ostringstream bad;
    for (const auto& [method, rows] : kAppendixExp) {
        for (const auto& [M, milli] : rows) {
            ++total;
            double v = integral_probability(method, M, DensitySpec::exp_iid()).value;
            if (std::abs(v - milli / 1000.0) <= 1e-3) {
                ++ok;
            } else {
                bad << ' ' << method_name(method) << "/M=" << M << " got "
                    << format_fixed(v, 6);
            }
        }
    }
    r.pass = ok == total;
    r.details = std::to_string(ok) + "/" + std::to_string(total) +
                " integrals within 1e-3 of the published values" + bad.str();
    r = finish(std::move(r), t0);
    if (r.seconds >= 30.0) {
        r.pass = false;
        r.details += " [exceeded 30 s budget]";
    }
    return r;
}

CheckResult verify_appendix_montecarlo(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CheckResult r{.name = "appendix-montecarlo"};
    EstimateOptions eopts{.threads = opts.threads};

    int exp_hits = 0;
    for (const auto& [method, rows] : kAppendixExp) {
        for (const auto& [M, milli] : rows) {
            (void)milli;
            double analytic = integral_probability(method, M, DensitySpec::exp_iid()).value;
            auto est = estimate_violation_prob(method, M,
                                               SamplerSpec::exp_iid(1.0, opts.seed),
                                               opts.samples, eopts);
            if (est.ci_low <= analytic && analytic <= est.ci_high) ++exp_hits;
        }
    }

    int wedge_hits = 0;
    for (const auto& [method, row] : kTable1) {
        (void)row;
        for (int M : kAppendixWedgeSeats) {
            double analytic = exact_probability(method, M).value;
            auto est = estimate_violation_prob(method, M,
                                               SamplerSpec::wedge(1e6, opts.seed),
                                               opts.samples, eopts);
            if (est.ci_low <= analytic && analytic <= est.ci_high) ++wedge_hits;
        }
    }

    r.pass = exp_hits >= 11 && wedge_hits >= 13;
    r.details = "exp-iid CI containment " + std::to_string(exp_hits) +
                "/12 (need 11), wedge " + std::to_string(wedge_hits) +
                "/15 (need 13), n=" + std::to_string(opts.samples) +
                ", seed=" + std::to_string(opts.seed);
    r = finish(std::move(r), t0);
    if (r.seconds >= 120.0) {
        r.pass = false;
        r.details += " [exceeded 120 s budget]";
    }
    return r;
}

CheckResult verify_oracle_equivalence(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CheckResult r{.name = "oracle-equivalence"};
    long long mismatches = 0, checked = 0;
    for (Method m : kGuaranteeMethods) {
        auto rng = check_rng(opts, 0x6001 + static_cast<int>(m));
        auto samplers = mixed_samplers(rng());
        for (int i = 0; i < 10000; ++i) {
            Triple t = mixed_triple(samplers, i);
            int M = 5 + static_cast<int>(rng() % 46);
            PopulationInstance inst =
                PopulationInstance::from_doubles({t.p1, t.p2, t.p3}, M);
            try {
                bool engine_lower =
                    classify_violation(m, inst).status == ViolationStatus::Lower;
                bool test = criteria_test(m, standard_quotas(inst), M);
                ++checked;
                if (engine_lower != test) ++mismatches;
            } catch (const TieDetected&) {
                continue; // measure-zero tie; excluded by assumption
            }
        }
    }
    r.pass = mismatches == 0;
    r.details = std::to_string(mismatches) + " mismatches over " +
                std::to_string(checked) + " instances";
    return finish(std::move(r), t0);
}

CheckResult verify_structural_properties(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CheckResult r{.name = "structural-properties"};
    std::ostringstream os;
    bool ok = true;

    // (a) two-state instances never violate quota
    {
        auto rng = check_rng(opts, 0x7001);
        auto samplers = mixed_samplers(rng());
        long long bad = 0;
        for (int i = 0; i < 10000; ++i) {
            Triple t = mixed_triple(samplers, i);
            int M = 2 + static_cast<int>(rng() % 49);
            Method m = kAllMethods[rng() % 7];
            PopulationInstance inst = PopulationInstance::from_doubles({t.p1, t.p3}, M);
            try {
                if (classify_violation(m, inst).status != ViolationStatus::None) ++bad;
            } catch (const TieDetected&) {
                continue;
            }
        }
        ok = ok && bad == 0;
        os << "n=2 violations: " << bad << "; ";
    }

    // (b)+(c) three-state sweep: no double-sided violations (quota_check
    // throws), and every violation by a nonzero-guarantee method has the
    // seat shape (ceil q1, ceil q2, floor q3 - 1)
    {
        auto rng = check_rng(opts, 0x7002);
        auto samplers = mixed_samplers(rng());
        long long violations = 0, double_sided = 0;
        long long bad_shape = 0, bad_shape_modjeff_upper = 0;
        for (int i = 0; i < 10000; ++i) {
            Triple t = mixed_triple(samplers, i);
            int M = 5 + static_cast<int>(rng() % 46);
            Method m = kGuaranteeMethods[rng() % 5];
            PopulationInstance inst =
                PopulationInstance::from_doubles({t.p1, t.p2, t.p3}, M);
            try {
                Apportionment a = apportion(m, inst);
                ViolationReport rep;
                try {
                    rep = quota_check(inst.populations, a.allocation, M);
                } catch (const std::logic_error&) {
                    ++double_sided;
                    continue;
                }
                if (rep.status == ViolationStatus::None) continue;
                ++violations;
                QuotaVector q = standard_quotas(inst);
                // populations arrive ascending from the samplers
                bool shape = a.allocation[0] == q.ceilings[0] &&
                             a.allocation[1] == q.ceilings[1] &&
                             a.allocation[2] == q.floors[2] - 1;
                if (!shape) {
                    ++bad_shape;
                    // Jefferson keeps its upper violations after the delta(0)
                    // modification; the shape theorem's hypothesis (strictly
                    // decreasing (x+1)/delta(x)) does not hold for it.
                    if (m == Method::ModifiedJefferson &&
                        rep.status == ViolationStatus::Upper)
                        ++bad_shape_modjeff_upper;
                }
            } catch (const TieDetected&) {
                continue;
            }
        }
        ok = ok && double_sided == 0 && bad_shape == 0;
        os << "violations seen: " << violations << ", off-shape: " << bad_shape
           << " (of which mod-jefferson upper: " << bad_shape_modjeff_upper
           << "), double-sided: " << double_sided << "; ";
    }

    // (d) scale and permutation invariance
    {
        auto rng = check_rng(opts, 0x7003);
        auto samplers = mixed_samplers(rng());
        long long bad = 0;
        for (int i = 0; i < 1000; ++i) {
            Triple t = mixed_triple(samplers, i);
            int M = 5 + static_cast<int>(rng() % 46);
            Method m = kAllMethods[rng() % 7];
            std::vector<Rational> pops{Rational(t.p1), Rational(t.p2), Rational(t.p3)};
            Rational lambda(1 + rng() % 997, 1 + rng() % 997);
            std::vector<Rational> scaled;
            for (const auto& p : pops) scaled.push_back(p * lambda);
            std::vector<int> perm{0, 1, 2};
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Rational> permuted(3);
            for (int j = 0; j < 3; ++j) permuted[j] = pops[perm[j]];
            try {
                auto base = apportion(m, pops, M).allocation;
                if (apportion(m, scaled, M).allocation != base) ++bad;
                auto shuffled = apportion(m, permuted, M).allocation;
                for (int j = 0; j < 3; ++j)
                    if (shuffled[j] != base[perm[j]]) ++bad;
            } catch (const TieDetected&) {
                continue;
            }
        }
        ok = ok && bad == 0;
        os << "invariance failures: " << bad << "; ";
    }

    // (e) D(floor(M/2)) <= 0: zero at even M; at odd M strictly negative
    // except modified Jefferson, whose divisor equals Jefferson's away from
    // zero and gives exactly zero once k-1 >= 1
    {
        long long bad = 0;
        for (Method m : kGuaranteeMethods) {
            for (int M = 3; M <= 200; ++M) {
                long long k = M / 2;
                if (k < 1) continue;
                // sign(D(k)) = sign((M-k) d(k-1) - k d(M-k-1))
                int sign = compare_scaled(m, Rational(M - k), k - 1, Rational(k), M - k - 1);
                bool zero_expected =
                    M % 2 == 0 || (m == Method::ModifiedJefferson && M >= 5);
                if (zero_expected ? sign != 0 : sign >= 0) ++bad;
            }
        }
        ok = ok && bad == 0;
        os << "D(floor(M/2)) sign failures: " << bad;
    }

    r.pass = ok;
    r.details = os.str();
    return finish(std::move(r), t0);
}

CheckResult verify_tau_consistency(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CheckResult r{.name = "tau-consistency"};
    std::ostringstream os;
    bool ok = true;

    // (3/2) |V| == exact sum
    {
        double worst = 0;
        for (Method m : kGuaranteeMethods)
            for (int M = 3; M <= 200; ++M)
                worst = std::max(worst,
                                 std::abs(1.5 * violatory_set(m, M).total_length -
                                          exact_probability(m, M).value));
        ok = ok && worst <= 1e-12;
        os << "max |1.5 len(V) - sum| = " << worst << "; ";
    }

    // stabilization scans agree with the pointwise classifier
    {
        long long bad = 0, scanned = 0;
        for (Method m : kGuaranteeMethods) {
            for (int M : {10, 20}) {
                auto rng = check_rng(opts, 0x8000 + 100 * M + static_cast<int>(m));
                int done = 0;
                while (done < 100) {
                    double t = (uniform01(rng) - 0.5) * 2.0 / 3.0;
                    try {
                        TauValue tau = TauValue::from_double(t);
                        bool violatory = is_ultimately_violatory(m, M, tau);
                        StabilizationScan scan = stabilization_scan(m, tau, M);
                        if (scan.violatory != violatory) ++bad;
                        Rational x(BigInt(1) << (scan.exponent + 2)); // 4 x_hat
                        Rational y = (2 * x - 1) / (1 - 3 * tau.value());
                        PopulationInstance inst({Rational(1), x, y}, M);
                        bool caused = classify_violation(m, inst).cause ==
                                      ViolationCause::CausedByNonzero;
                        if (caused != violatory) ++bad;
                        ++done;
                        ++scanned;
                    } catch (const ExceptionalTau&) {
                        continue;
                    } catch (const TieDetected&) {
                        continue;
                    } catch (const OutOfRange&) {
                        continue; // drew the boundary itself
                    }
                }
            }
        }
        ok = ok && bad == 0;
        os << "stabilization disagreements: " << bad << "/" << scanned;
    }

    r.pass = ok;
    r.details = os.str();
    return finish(std::move(r), t0);
}

CheckResult verify_threshold_windows(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CheckResult r{.name = "threshold-windows"};
    const Method methods[] = {Method::HuntingtonHill, Method::ModifiedJefferson,
                              Method::ModifiedWebster, Method::Dean};
    const int M = 10;
    long long bad = 0, tested = 0;

    auto caused_at = [&](Method m, const TauValue& tau, double y_val) {
        Rational y(y_val);
        Rational x = x_on_line(y, tau);
        PopulationInstance inst({Rational(1), x, y}, M);
        return classify_violation(m, inst).cause == ViolationCause::CausedByNonzero;
    };

    for (Method m : methods) {
        auto rng = check_rng(opts, 0x9000 + static_cast<int>(m));
        int done = 0;
        while (done < 200) {
            double t = (uniform01(rng) - 0.5) * 2.0 / 3.0;
            try {
                TauValue tau = TauValue::from_double(t);
                ThresholdSet ts = threshold_set(m, tau, M);
                double entry = wedge_entry(t);
                std::vector<std::pair<double, bool>> probes; // (y, expect caused)

                if (ts.y_floor * 0.999 > entry * 1.001) {
                    probes.emplace_back(ts.y_floor * 0.999, false);
                    probes.emplace_back(std::sqrt(entry * ts.y_floor), false);
                }
                if (ts.ultimately_violatory) {
                    double base = std::max(ts.y_floor, entry);
                    probes.emplace_back(base * 1.001, true);
                    probes.emplace_back(base * 2.0, true);
                    probes.emplace_back(base * 100.0, true);
                } else {
                    double lo = std::max(ts.y_floor, entry);
                    if (ts.y_tau > lo * 1.002) {
                        probes.emplace_back(lo * 1.001, true);
                        probes.emplace_back(std::sqrt(lo * ts.y_tau), true);
                        probes.emplace_back(ts.y_tau * 0.999, true);
                    }
                    probes.emplace_back(std::max(ts.y_tau, lo) * 1.001, false);
                    probes.emplace_back(std::max(ts.y_tau, lo) * 10.0, false);
                }

                for (auto [y, expect] : probes) {
                    ++tested;
                    if (caused_at(m, tau, y) != expect) ++bad;
                }
                ++done;
            } catch (const ExceptionalTau&) {
                continue;
            } catch (const TieDetected&) {
                continue;
            } catch (const OutOfWedge&) {
                continue;
            } catch (const OutOfRange&) {
                continue;
            }
        }
    }
    r.pass = bad == 0;
    r.details = std::to_string(bad) + " window disagreements over " +
                std::to_string(tested) + " probes";
    return finish(std::move(r), t0);
}

CheckResult verify_tau_uniformity(const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CheckResult r{.name = "tau-uniformity"};
    double d_wedge =
        tau_uniformity_ks(SamplerSpec::wedge(1e6, opts.seed), opts.samples);
    double d_exp =
        tau_uniformity_ks(SamplerSpec::exp_iid(1.0, opts.seed), opts.samples);
    double s = std::sqrt(static_cast<double>(opts.samples));
    r.pass = d_wedge * s < kKs1PercentCritical && d_exp * s < kKs1PercentCritical;
    std::ostringstream os;
    os << "KS*sqrt(n): wedge=" << format_fixed(d_wedge * s, 4)
       << ", exp-iid=" << format_fixed(d_exp * s, 4) << " (1% critical "
       << kKs1PercentCritical << ")";
    r.details = os.str();
    return finish(std::move(r), t0);
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };

    if (want("table1")) out.push_back(verify_table1());
    if (want("appendix")) {
        out.push_back(verify_appendix_integrals());
        out.push_back(verify_appendix_montecarlo(opts));
    }
    if (want("properties")) {
        out.push_back(verify_jefferson_closed_form());
        out.push_back(verify_limits());
        out.push_back(verify_oracle_equivalence(opts));
        out.push_back(verify_structural_properties(opts));
        out.push_back(verify_tau_consistency(opts));
        out.push_back(verify_threshold_windows(opts));
        out.push_back(verify_tau_uniformity(opts));
    }
    return out;
}

} // namespace seats
