#include "doctest.h"

#include "property_laws.hpp"
#include "test_support.hpp"

#include "thetainv/repro.hpp"

using namespace thetainv;
using namespace testsup;

TEST_CASE("reproduction case list") {
    std::vector<std::string> expect{
        "example-235",     "prop-1ttp",    "prop-w-ad",
        "acyclicity-adjoint", "v4-invariants", "decomposition",
        "surgery-theta",   "cyclic-lift",  "coker-independence",
    };
    CHECK(repro_case_names() == expect);
}

TEST_CASE("worked example case") {
    ReproReport r = run_repro("example-235");
    CHECK(r.match);
    CHECK(r.expected == r.computed);
    CHECK(r.computed.find("12") != std::string::npos);
    CHECK(r.computed.find("-3+√5") != std::string::npos);
    CHECK(r.computed.find("(1/2)+(1/2)√5") != std::string::npos);
}

TEST_CASE("cohomology vanishing case") {
    ReproReport r = run_repro("acyclicity-adjoint");
    CHECK(r.match);
    CHECK(r.computed.find("(0, 0)") != std::string::npos);
}

TEST_CASE("all cases reproduce") {
    std::vector<ReproReport> all = run_all_repro();
    CHECK(all.size() == repro_case_names().size());
    for (const ReproReport& r : all) {
        INFO(r.case_name, ": ", r.computed);
        CHECK(r.match);
        CHECK(!r.source.empty());
    }
}

TEST_CASE("unknown case name") {
    CHECK_THROWS_AS(run_repro("unknown"), std::invalid_argument);
}

TEST_CASE("report serialization") {
    ReproReport r = run_repro("surgery-theta");
    io::json j = report_to_json(r);
    CHECK(j["case"] == "surgery-theta");
    CHECK(j["match"] == true);
    CHECK(!j.contains("runtime"));

    ReproReport back = report_from_json(j);
    CHECK(back == r);  // runtime is informational and excluded from equality

    io::json bad = j;
    bad.erase("expected");
    CHECK_THROWS_AS(report_from_json(bad), io::schema_error);
    io::json wrong = j;
    wrong["match"] = "yes";
    CHECK_THROWS_AS(report_from_json(wrong), io::schema_error);
}

TEST_CASE("law: reproduction cases all match") {
    auto res = laws::law_reproduction_cases();
    INFO(res.note);
    CHECK(res.ok);
}

TEST_CASE("law: reproduction determinism") {
    auto res = laws::law_reproduction_determinism();
    INFO(res.note);
    CHECK(res.ok);
}
