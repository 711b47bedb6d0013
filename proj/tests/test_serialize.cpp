#include "doctest.h"

#include "seats/serialize.hpp"

using namespace seats;

TEST_CASE("apportionment json shape") {
    PopulationInstance inst({Rational(1), Rational(100), Rational(1990)}, 10);
    auto a = apportion(Method::ModifiedJefferson, inst);
    auto rep = classify_violation(Method::ModifiedJefferson, inst);
    Json j = to_json(a, inst, rep);

    CHECK(j["method"] == "mod-jefferson");
    CHECK(j["M"] == 10);
    CHECK(j["populations"].size() == 3);
    CHECK(j["seats"] == Json::array({1, 1, 8}));
    CHECK(j["order"].size() == 10);
    CHECK(j["violation"]["status"] == "lower");
    CHECK(j["violation"]["states"] == Json::array({2}));
    CHECK(j["violation"]["cause"] == "caused-by-nonzero");
}

TEST_CASE("violatory set json") {
    Json j = to_json(violatory_set(Method::ModifiedJefferson, 10));
    CHECK(j["method"] == "mod-jefferson");
    CHECK(j["M"] == 10);
    CHECK(j["intervals"].size() == 1);
    CHECK(j["total_length"].get<double>() == doctest::Approx(2.0 / 27.0));
}

TEST_CASE("threshold and profile json") {
    TauValue tau{Rational(3, 10)};
    Json p = to_json(tau_profile(Method::ModifiedJefferson, 10, tau));
    CHECK(p["k"] == 9);
    CHECK(p["ultimately_violatory"] == true);

    Json t = to_json(threshold_set(Method::ModifiedJefferson, tau, 10));
    CHECK(t["y_max"] == "inf");
    CHECK(t["y_star"].is_null());
}

TEST_CASE("csv rows") {
    auto r = exact_probability(Method::Adams, 10);
    CHECK(csv_row(r) == "adams,10,exact-sum,-,0.380159,0,false");

    auto est = estimate_violation_prob(Method::ModifiedJefferson, 10,
                                       SamplerSpec::wedge(1e6, 1), 1000);
    std::string row = csv_row(est, SamplerSpec::wedge(1e6, 1), 1.0 / 9.0);
    CHECK(row.find("mod-jefferson,10,wedge,1000,1,") == 0);
}

TEST_CASE("report rows round-trip between csv and json") {
    ReportRow row;
    row.add("method", "dean");
    row.add("value", 0.193147, 6);
    row.add("n", 100000ll);
    row.add("note", "contains, a comma");

    auto back_json = ReportRow::from_json(row.json());
    CHECK(back_json.fields == row.fields);

    auto back_csv = ReportRow::from_csv(row.csv_header(), row.csv_line());
    CHECK(back_csv.fields == row.fields);

    auto md = markdown_table({row});
    CHECK(md.find("| method |") == 0);
    CHECK(md.find("dean") != std::string::npos);
}
