#include <string>

#include "doctest.h"
#include "frenet4/report.hpp"

using namespace frenet4;

TEST_CASE("number formatting keeps 17 significant digits") {
    CHECK(JsonWriter::number(1.0) == "1");
    CHECK(JsonWriter::number(0.1) == "0.10000000000000001");
    CHECK(JsonWriter::number(-2.5e-7) == "-2.4999999999999999e-07");
    // Round trip: the printed form parses back to the exact same double.
    const double x = 0.12345678901234567;
    CHECK(std::stod(JsonWriter::number(x)) == x);
}

TEST_CASE("string escaping") {
    CHECK(JsonWriter::escape("plain") == "plain");
    CHECK(JsonWriter::escape("a\"b\\c") == "a\\\"b\\\\c");
    CHECK(JsonWriter::escape("line\nbreak\ttab") == "line\\nbreak\\ttab");
    CHECK(JsonWriter::escape(std::string("\x01", 1)) == "\\u0001");
}

TEST_CASE("writer layout: two-space indent, LF only, deterministic") {
    auto build = [] {
        JsonWriter w;
        w.begin_object();
        w.key("name");
        w.value("x");
        w.key("vals");
        w.begin_array();
        w.value(1);
        w.value(2.5);
        w.value(true);
        w.end_array();
        w.key("empty");
        w.begin_object();
        w.end_object();
        w.end_object();
        return w.str();
    };
    const std::string expected =
        "{\n"
        "  \"name\": \"x\",\n"
        "  \"vals\": [\n"
        "    1,\n"
        "    2.5,\n"
        "    true\n"
        "  ],\n"
        "  \"empty\": {}\n"
        "}";
    CHECK(build() == expected);
    CHECK(build() == build());
    CHECK(build().find('\r') == std::string::npos);
}

TEST_CASE("classification report serialization carries every section") {
    ClassificationReport rep;
    rep.samples = 64;
    rep.helix.verdict = Verdict::yes;
    rep.helix.residual = {1e-15, 5e-16};
    rep.ccr.verdict = Verdict::yes;
    rep.ccr.a = 0.25;
    rep.ccr.b = -0.5;
    rep.generalized_helix.verdict = Verdict::no;
    rep.slant3.verdict = Verdict::inconclusive;
    rep.sphere.verdict = Verdict::yes;
    rep.sphere.r = 1.4142135623730951;
    rep.ccr_sphere_evaluated = true;
    rep.ccr_sphere.verdict = Verdict::yes;

    const std::string json = to_json(rep);
    for (const char* key :
         {"\"samples\": 64", "\"tol_const\"", "\"tol_pde\"", "\"is_helix\"", "\"is_ccr\"",
          "\"a\": 0.25", "\"b\": -0.5", "\"generalized_helix\"", "\"slant3_helix\"",
          "\"verdict\": \"inconclusive\"", "\"sphere\"", "\"r\": 1.4142135623730951",
          "\"fit_vs_arclength\"", "\"ccr_sphere_evaluated\": true", "\"ccr_sphere\""})
        CHECK_MESSAGE(json.find(key) != std::string::npos, key);
    CHECK(json.back() == '\n');

    rep.ccr_sphere_evaluated = false;
    CHECK(to_json(rep).find("\"ccr_sphere\":") == std::string::npos);
}

TEST_CASE("discrepancy report serialization") {
    DiscrepancyReport rep;
    rep.items.push_back({"kappa", 2.0, 2.0, 0.0, Verdict::yes});
    rep.items.push_back({"sigma", -0.5, 0.5, 2.0, Verdict::no});
    rep.sign_B = -1.0;
    rep.sign_E = -1.0;
    rep.max_rel_diff = 2.0;

    const std::string json = to_json(rep);
    for (const char* key :
         {"\"name\": \"kappa\"", "\"name\": \"sigma\"", "\"closed_form\": -0.5",
          "\"rel_diff\": 2", "\"verdict\": \"false\"", "\"sign_N\": 1", "\"sign_B\": -1",
          "\"sign_E\": -1", "\"sigma_sign_flipped\": false", "\"max_rel_diff\": 2"})
        CHECK_MESSAGE(json.find(key) != std::string::npos, key);
}
