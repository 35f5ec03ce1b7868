#include "doctest.h"

#include "hsing/report.hpp"
#include "hsing/verify.hpp"

#include <cstdio>
#include <fstream>

using namespace hsing;

TEST_CASE("numeric encoding") {
    CHECK(integer_json(Integer(42)) == Json(42));
    CHECK(integer_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
    CHECK(rational_json(Rational(Integer(-1), Integer(3))) == Json("-1/3"));
    CHECK(rational_json(Rational(2)) == Json("2"));
}

TEST_CASE("analyze reports") {
    const Config cfg;
    const Json e8 = analyze_results(WeightSequence({2, 3, 5}), cfg);
    CHECK(e8["mu"] == 1);
    CHECK(e8["mu_bar"] == "1/30");
    CHECK(e8["exceptional_count"] == 9);
    CHECK(e8["ade_type"] == "E8");
    CHECK(e8["degenerate"] == false);

    const Json c = analyze_results(WeightSequence({3, 3}), cfg);
    CHECK(c["complement_count"] == 3);
    CHECK(c["exceptional_count"] == 1);
    CHECK(c["exceptional_count_applies"] == false);
    CHECK(c["sod"]["residual"] == "geometry");

    const Json one = analyze_results(WeightSequence({1}), cfg);
    CHECK(one["degenerate"] == true);
    CHECK(one["exceptional_count"] == 0);

    const Json k3 = analyze_results(WeightSequence({3, 3, 3, 3, 3, 3, 4, 4, 4, 4}), cfg);
    CHECK(k3["verdict"]["exact"] == 4);
    CHECK(k3["verdict"]["h"] == 5);
    CHECK(k3["verdict"]["q"] == 3);
}

TEST_CASE("reports are deterministic and schema-versioned") {
    const Config cfg;
    auto build = [&] {
        return make_report("analyze", {{"weights", {3, 4, 5}}}, analyze_results(WeightSequence({3, 4, 5}), cfg)).dump();
    };
    CHECK(build() == build());
    const Json r = Json::parse(build());
    CHECK(r["schema_version"] == kSchemaVersion);
    CHECK(r.contains("provenance"));
    const std::string text = render_text(r);
    CHECK(text.find("schema_version: 1") != std::string::npos);
}

TEST_CASE("quiver spec parsing") {
    CHECK(parse_quiver_spec("A2xA3").size() == 2);
    CHECK_THROWS_AS(parse_quiver_spec("D3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver_spec("Q4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver_spec("E"), std::invalid_argument);
    const Json q = quiver_results("A2xA2");
    CHECK(q["coxeter_polynomial"] == "x^4 + x^3 + x + 1");
    CHECK(q["vertices"] == 4);
}

TEST_CASE("config files") {
    const std::string path = "hsing_test_config.json";
    {
        std::ofstream(path) << R"({"window": 3, "node_limit": 1000, "max_d": 5})";
    }
    const Config c = load_config(path);
    CHECK(c.window == 3);
    CHECK(c.node_limit == 1000);
    CHECK(c.max_d == 5);
    CHECK(c.max_entry == 6);
    {
        std::ofstream(path) << R"({"windw": 3})";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    {
        std::ofstream(path) << "{not json";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config("/nonexistent/cfg.json"), std::invalid_argument);
}

TEST_CASE("verify suites") {
    Config cfg;
    cfg.max_n = 2;
    cfg.max_d = 4;
    for (const char* s : {"groups", "counts", "quiver", "mf", "partitions", "ghost", "knoerrer"}) {
        const Json r = run_suite(s, cfg);
        CHECK_MESSAGE(r["passed"] == true, s);
    }
    CHECK_THROWS_AS(run_suite("bogus", cfg), std::invalid_argument);
}
