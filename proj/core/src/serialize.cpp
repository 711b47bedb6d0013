#include "seats/serialize.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace seats {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

} // namespace

Json to_json(const Apportionment& a, const PopulationInstance& inst,
             const ViolationReport& report) {
    Json j;
    j["method"] = std::string(method_name(a.method));
    j["M"] = a.seats;
    Json pops = Json::array();
    for (const auto& p : inst.populations) pops.push_back(to_string(p));
    j["populations"] = std::move(pops);
    j["seats"] = a.allocation;
    Json order = Json::array();
    for (const auto& s : a.order) order.push_back({{"state", s.state}, {"seat", s.seat_index}});
    j["order"] = std::move(order);
    j["violation"] = {{"status", to_string(report.status)},
                      {"states", report.offending_states},
                      {"cause", to_string(report.cause)}};
    return j;
}

Json to_json(const ViolatorySet& vs) {
    Json j;
    j["method"] = std::string(method_name(vs.method));
    j["M"] = vs.seats;
    Json intervals = Json::array();
    for (const auto& [lo, hi] : vs.intervals) intervals.push_back({lo, hi});
    j["intervals"] = std::move(intervals);
    j["total_length"] = vs.total_length;
    return j;
}

Json to_json(const TauProfile& p) {
    Json j;
    j["tau"] = to_double(p.tau);
    j["M"] = p.seats;
    j["q2_limit"] = p.q2_limit;
    j["q3_limit"] = p.q3_limit;
    j["k"] = p.k;
    j["d"] = p.d;
    j["d_star"] = p.d_star;
    j["exceptional"] = p.exceptional;
    j["ultimately_violatory"] = p.ultimately_violatory;
    return j;
}

Json to_json(const ThresholdSet& ts) {
    Json j;
    j["y1"] = ts.y1;
    j["y2"] = ts.y2;
    j["y3"] = ts.y3;
    j["y_floor"] = ts.y_floor;
    if (ts.y_star)
        j["y_star"] = *ts.y_star;
    else
        j["y_star"] = nullptr;
    j["y_tau"] = ts.y_tau;
    j["y_max"] = std::isinf(ts.y_max) ? Json("inf") : Json(ts.y_max);
    j["ultimately_violatory"] = ts.ultimately_violatory;
    return j;
}

std::string csv_header_probability() {
    return "method,M,mode,density,value,tol,lower_bound_only";
}

std::string csv_row(const ProbabilityResult& r) {
    std::ostringstream os;
    os << method_name(r.method) << ',' << r.seats << ',' << to_string(r.mode) << ','
       << (r.density.empty() ? "-" : r.density) << ',' << format_fixed(r.value, 6) << ','
       << r.tol << ',' << (r.lower_bound_only ? "true" : "false");
    return os.str();
}

std::string csv_header_estimate() {
    return "method,M,sampler,n,seed,p_hat,ci_low,ci_high,theoretical,in_ci";
}

std::string csv_row(const EstimateResult& r, const SamplerSpec& sampler,
                    double theoretical) {
    std::ostringstream os;
    bool in_ci = r.ci_low <= theoretical && theoretical <= r.ci_high;
    os << method_name(r.method) << ',' << r.seats << ',' << sampler_name(sampler) << ','
       << r.n << ',' << r.seed << ',' << format_fixed(r.p_hat, 6) << ','
       << format_fixed(r.ci_low, 6) << ',' << format_fixed(r.ci_high, 6) << ','
       << format_fixed(theoretical, 6) << ',' << (in_ci ? "true" : "false");
    return os.str();
}

void ReportRow::add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
}

void ReportRow::add(std::string key, double value, int digits) {
    fields.emplace_back(std::move(key), format_fixed(value, digits));
}

void ReportRow::add(std::string key, long long value) {
    fields.emplace_back(std::move(key), std::to_string(value));
}

std::string ReportRow::csv_header() const {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i].first);
    }
    return out;
}

std::string ReportRow::csv_line() const {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i].second);
    }
    return out;
}

Json ReportRow::json() const {
    Json j = Json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    return j;
}

ReportRow ReportRow::from_json(const Json& j) {
    ReportRow row;
    for (auto it = j.begin(); it != j.end(); ++it)
        row.add(it.key(), it.value().get<std::string>());
    return row;
}

ReportRow ReportRow::from_csv(const std::string& header, const std::string& line) {
    auto keys = csv_split(header);
    auto values = csv_split(line);
    if (keys.size() != values.size())
        throw std::invalid_argument("csv header/row arity mismatch");
    ReportRow row;
    for (size_t i = 0; i < keys.size(); ++i) row.add(keys[i], values[i]);
    return row;
}

std::string markdown_table(const std::vector<ReportRow>& rows) {
    if (rows.empty()) return "";
    std::string out = "|";
    for (const auto& [k, _] : rows.front().fields) out += " " + k + " |";
    out += "\n|";
    for (size_t i = 0; i < rows.front().fields.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : rows) {
        out += "|";
        for (const auto& [_, v] : row.fields) out += " " + v + " |";
        out += "\n";
    }
    return out;
}

} // namespace seats
