#pragma once

#include "seats/engine.hpp"
#include "seats/montecarlo.hpp"
#include "seats/probability.hpp"
#include "seats/tau.hpp"
#include "seats/thresholds.hpp"
#include "seats/violation.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace seats {

using Json = nlohmann::ordered_json;

Json to_json(const Apportionment& a, const PopulationInstance& inst,
             const ViolationReport& report);
Json to_json(const ViolatorySet& vs);
Json to_json(const TauProfile& profile);
Json to_json(const ThresholdSet& ts);

/// CSV row (with header) for probability and simulation results. Probabilities
/// are printed at six decimals; seeds and counts verbatim.
std::string csv_header_probability();
std::string csv_row(const ProbabilityResult& r);
std::string csv_header_estimate();
std::string csv_row(const EstimateResult& r, const SamplerSpec& sampler,
                    double theoretical);

/// Flat ordered key/value record backing the CLI's csv/json/md emitters.
/// Values are pre-formatted strings so every format prints identical numbers.
struct ReportRow {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value);
    void add(std::string key, double value, int digits = 6);
    void add(std::string key, long long value);

    std::string csv_header() const;
    std::string csv_line() const;
    Json json() const;

    static ReportRow from_json(const Json& j);
    static ReportRow from_csv(const std::string& header, const std::string& line);
};

/// Markdown table from uniform rows (shared header).
std::string markdown_table(const std::vector<ReportRow>& rows);

} // namespace seats
