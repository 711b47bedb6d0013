// seats: divisor-method apportionment with nonzero-seat guarantees,
// quota-violation classification, and violation-probability analysis.

#include "seats/engine.hpp"
#include "seats/errors.hpp"
#include "seats/instance.hpp"
#include "seats/montecarlo.hpp"
#include "seats/probability.hpp"
#include "seats/serialize.hpp"
#include "seats/tau.hpp"
#include "seats/verify.hpp"
#include "seats/violation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace seats;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTie = 2;
constexpr int kExitVerifyFailed = 3;

struct OutputSink {
    std::string format = "json"; // json | csv | md
    std::string path;            // empty: stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file " + path);
            out << text;
            if (!text.empty() && text.back() != '\n') out << '\n';
        }
    }

    void write_rows(const std::vector<ReportRow>& rows) const {
        if (format == "json") {
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(r.json());
            write(arr.dump(2));
        } else if (format == "csv") {
            std::ostringstream os;
            if (!rows.empty()) os << rows.front().csv_header() << '\n';
            for (const auto& r : rows) os << r.csv_line() << '\n';
            write(os.str());
        } else {
            write(markdown_table(rows));
        }
    }
};

Method parse_method(const std::string& name) {
    auto m = method_from_name(name);
    if (!m)
        throw CLI::ValidationError("--method", "unknown method '" + name + "'");
    return *m;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<Method> parse_method_list(const std::string& arg) {
    if (arg == "all")
        return {Method::ModifiedJefferson, Method::Adams, Method::ModifiedWebster,
                Method::HuntingtonHill, Method::Dean};
    std::vector<Method> out;
    for (const auto& name : split_list(arg)) out.push_back(parse_method(name));
    return out;
}

DensitySpec parse_density(const std::string& name) {
    if (name == "exp-iid") return DensitySpec::exp_iid();
    if (name == "dirichlet111") return DensitySpec::dirichlet111();
    if (name == "uniform-wedge") return DensitySpec::uniform_wedge();
    throw CLI::ValidationError("--density", "unknown density '" + name + "'");
}

std::uint64_t env_default_seed() {
    if (const char* env = std::getenv("SEATS_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return kDefaultSeed;
}

ReportRow probability_row(const ProbabilityResult& r) {
    ReportRow row;
    row.add("method", std::string(method_name(r.method)));
    row.add("M", static_cast<long long>(r.seats));
    row.add("mode", std::string(to_string(r.mode)));
    row.add("density", r.density.empty() ? "-" : r.density);
    row.add("value", r.value, 6);
    row.add("tol", r.tol, 9);
    row.add("lower_bound_only", r.lower_bound_only ? "true" : "false");
    return row;
}

int run_apportion(const OutputSink& sink, const std::string& method_name_arg,
                  const std::string& pops_arg, int seats) {
    Method m = parse_method(method_name_arg);
    PopulationInstance inst =
        PopulationInstance::from_strings(split_list(pops_arg), seats);
    Apportionment a = seats::apportion(m, inst);
    ViolationReport rep = classify_violation(m, inst);

    if (sink.format == "json") {
        sink.write(to_json(a, inst, rep).dump(2));
        return kExitOk;
    }
    ReportRow row;
    row.add("method", std::string(method_name(m)));
    row.add("M", static_cast<long long>(seats));
    std::string seat_list;
    for (size_t i = 0; i < a.allocation.size(); ++i) {
        if (i) seat_list += ' ';
        seat_list += std::to_string(a.allocation[i]);
    }
    row.add("seats", seat_list);
    row.add("status", to_string(rep.status));
    std::string states;
    for (size_t i = 0; i < rep.offending_states.size(); ++i) {
        if (i) states += ' ';
        states += std::to_string(rep.offending_states[i]);
    }
    row.add("states", states.empty() ? "-" : states);
    row.add("cause", to_string(rep.cause));
    sink.write_rows({row});
    return kExitOk;
}

int run_prob_table(const OutputSink& sink, const std::string& seats_arg,
                   const std::string& methods_arg) {
    std::vector<int> seat_values;
    for (const auto& s : split_list(seats_arg)) seat_values.push_back(std::stoi(s));
    std::vector<ReportRow> rows;
    for (Method m : parse_method_list(methods_arg)) {
        ReportRow row;
        row.add("method", std::string(method_name(m)));
        for (int M : seat_values)
            row.add("M=" + std::to_string(M), exact_probability(m, M).value, 3);
        rows.push_back(std::move(row));
    }
    sink.write_rows(rows);
    return kExitOk;
}

int run_verify(const OutputSink& sink, const std::string& suite,
               const VerifyOptions& opts) {
    std::vector<CheckResult> results = run_suite(suite, opts);
    if (results.empty())
        throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");

    bool all_pass = true;
    Json summary = Json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " ("
                  << format_fixed(r.seconds, 2) << " s): " << r.details << '\n';
        summary.push_back({{"check", r.name}, {"pass", r.pass}, {"details", r.details}});
    }
    Json out{{"suite", suite},
             {"seed", opts.seed},
             {"samples", opts.samples},
             {"pass", all_pass},
             {"checks", summary}};
    sink.write(out.dump(2));
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor apportionment, quota-violation classification, and "
                 "violation probabilities"};
    app.require_subcommand(1);
    app.fallthrough(); // let global --format/--out appear after the subcommand

    OutputSink sink;
    app.add_option("--format", sink.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    app.add_option("--out", sink.path, "write output to a file instead of stdout");

    // apportion
    std::string method_arg, pops_arg;
    int seats_arg = 0;
    auto* cmd_app = app.add_subcommand("apportion", "apportion seats and classify "
                                                    "quota violations");
    cmd_app->add_option("--method", method_arg, "divisor method")->required();
    cmd_app->add_option("--pops", pops_arg, "comma-separated populations")->required();
    cmd_app->add_option("--seats", seats_arg, "house size M")->required();

    // prob
    auto* cmd_prob = app.add_subcommand("prob", "violation probabilities");
    cmd_prob->require_subcommand(1);
    std::string prob_method, prob_density = "exp-iid", table_seats = "10,20,50,100,500,1000",
                table_methods = "all";
    int prob_seats = 0;
    double prob_tol = 1e-6;
    auto* prob_exact = cmd_prob->add_subcommand("exact", "exact finite-M sum");
    prob_exact->add_option("--method", prob_method)->required();
    prob_exact->add_option("--seats", prob_seats)->required();
    auto* prob_limit = cmd_prob->add_subcommand("limit", "M -> infinity limit");
    prob_limit->add_option("--method", prob_method)->required();
    auto* prob_integral =
        cmd_prob->add_subcommand("integral", "density-model double integral");
    prob_integral->add_option("--method", prob_method)->required();
    prob_integral->add_option("--seats", prob_seats)->required();
    prob_integral->add_option("--density", prob_density, "exp-iid | dirichlet111")
        ->capture_default_str();
    prob_integral->add_option("--tol", prob_tol)->capture_default_str();
    auto* prob_table = cmd_prob->add_subcommand("table", "probability table across M");
    prob_table->add_option("--seats", table_seats)->capture_default_str();
    prob_table->add_option("--methods", table_methods)->capture_default_str();

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo violation frequency");
    std::string sim_method, sim_sampler = "wedge";
    int sim_seats = 0, sim_threads = 0;
    long long sim_samples = 100000;
    double sim_h = 1e6, sim_lambda = 1.0;
    bool sim_wilson = false;
    std::uint64_t seed = env_default_seed();
    cmd_sim->add_option("--method", sim_method)->required();
    cmd_sim->add_option("--seats", sim_seats)->required();
    cmd_sim->add_option("--sampler", sim_sampler, "wedge | exp-iid | dirichlet111")
        ->capture_default_str();
    cmd_sim->add_option("--samples", sim_samples)->capture_default_str();
    cmd_sim->add_option("--hmax", sim_h, "wedge sampler upper bound h")->capture_default_str();
    cmd_sim->add_option("--lambda", sim_lambda, "exponential rate")->capture_default_str();
    cmd_sim->add_option("--seed", seed, "master seed (default: SEATS_SEED or 42)");
    cmd_sim->add_option("--threads", sim_threads, "0 = all cores")->capture_default_str();
    cmd_sim->add_flag("--wilson", sim_wilson, "Wilson interval instead of Wald");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    long long verify_samples = 100000;
    std::uint64_t verify_seed = env_default_seed();
    int verify_threads = 0;
    cmd_verify->add_option("--suite", suite, "table1 | appendix | properties | all")
        ->capture_default_str();
    cmd_verify->add_option("--samples", verify_samples)->capture_default_str();
    cmd_verify->add_option("--seed", verify_seed);
    cmd_verify->add_option("--threads", verify_threads)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_app->parsed())
            return run_apportion(sink, method_arg, pops_arg, seats_arg);

        if (cmd_prob->parsed()) {
            if (prob_exact->parsed()) {
                sink.write_rows(
                    {probability_row(exact_probability(parse_method(prob_method), prob_seats))});
                return kExitOk;
            }
            if (prob_limit->parsed()) {
                sink.write_rows({probability_row(limit_probability(parse_method(prob_method)))});
                return kExitOk;
            }
            if (prob_integral->parsed()) {
                auto r = integral_probability(parse_method(prob_method), prob_seats,
                                              parse_density(prob_density), prob_tol);
                sink.write_rows({probability_row(r)});
                return kExitOk;
            }
            return run_prob_table(sink, table_seats, table_methods);
        }

        if (cmd_sim->parsed()) {
            Method m = parse_method(sim_method);
            SamplerSpec spec;
            if (sim_sampler == "wedge") {
                spec = SamplerSpec::wedge(sim_h, seed);
            } else if (sim_sampler == "exp-iid") {
                spec = SamplerSpec::exp_iid(sim_lambda, seed);
            } else if (sim_sampler == "dirichlet111") {
                spec = SamplerSpec::dirichlet111(seed);
            } else {
                throw CLI::ValidationError("--sampler",
                                           "unknown sampler '" + sim_sampler + "'");
            }
            double theoretical =
                spec.kind == SamplerSpec::Kind::WedgeUniform
                    ? exact_probability(m, sim_seats).value
                    : integral_probability(m, sim_seats, DensitySpec::exp_iid()).value;
            EstimateOptions opts{.threads = sim_threads, .wilson = sim_wilson};
            EstimateResult est = estimate_violation_prob(m, sim_seats, spec, sim_samples, opts);

            ReportRow row;
            row.add("method", std::string(method_name(m)));
            row.add("M", static_cast<long long>(sim_seats));
            row.add("sampler", std::string(sampler_name(spec)));
            row.add("n", est.n);
            row.add("seed", std::to_string(est.seed));
            row.add("p_hat", est.p_hat, 6);
            row.add("ci_low", est.ci_low, 6);
            row.add("ci_high", est.ci_high, 6);
            row.add("theoretical", theoretical, 6);
            row.add("in_ci", est.ci_low <= theoretical && theoretical <= est.ci_high
                                 ? "true"
                                 : "false");
            sink.write_rows({row});
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            VerifyOptions opts{.samples = verify_samples, .seed = verify_seed,
                               .threads = verify_threads};
            return run_verify(sink, suite, opts);
        }
    } catch (const TieDetected& e) {
        std::cerr << "tie detected: " << e.what() << '\n';
        return kExitTie;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
