/*
 * Copyright 2026 The Symmetria Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include <cmath>
#include <string>

#include "symmetria/cli/report.hpp"
#include "symmetria/cli/runner.hpp"
#include "symmetria/cli/serialize.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/fullerene/matching.hpp"
#include "symmetria/liealg/structure.hpp"
#include "symmetria/spacetime/spacetime.hpp"

using namespace symmetria;
using namespace symmetria::cli;

TEST_CASE("judging residuals") {
    CHECK(judge(1e-10, 1e-9) == Status::pass);
    CHECK(judge(1e-9, 1e-9) == Status::pass);
    CHECK(judge(2e-9, 1e-9) == Status::fail);
    CHECK(judge(NAN, 1.0) == Status::fail);
    CHECK(judge(INFINITY, INFINITY) == Status::fail);
    CHECK(judge(std::nullopt, 1.0) == Status::fail);
    CHECK(judge(0.0, 0.0) == Status::pass);
}

TEST_CASE("non-finite residuals serialize as null") {
    Check c;
    c.name = "x";
    c.residual = NAN;
    c.tolerance = 1e-9;
    c.status = Status::fail;
    const auto j = to_json(c);
    CHECK(j["residual"].is_null());
    CHECK(j["status"] == "fail");
    CHECK(j["tolerance"] == 1e-9);
}

TEST_CASE("text report layout") {
    CheckReport r;
    r.suite = "demo";
    Check a;
    a.name = "alpha";
    a.status = Status::pass;
    a.residual = 0.0;
    a.tolerance = 0.0;
    a.samples = 3;
    Check b = a;
    b.name = "beta";
    b.status = Status::fail;
    b.residual = 2.5;
    r.checks = {b, a};
    r.sort_checks();
    CHECK(r.checks.front().name == "alpha");
    const auto text = format_text({r});
    CHECK(text.find("== demo (1/2 passed)") != std::string::npos);
    CHECK(text.find("FAIL  beta  residual=2.5") != std::string::npos);
    CHECK(text.find("total 2, passed 1, failed 1") != std::string::npos);
}

TEST_CASE("suite names resolve") {
    const auto all = resolve_suites({"all"});
    CHECK(all == known_suites());
    CHECK(all.size() == 8);
    CHECK(resolve_suites({"sklyanin", "hopf", "hopf"}) == std::vector<std::string>{"hopf", "sklyanin"});
    CHECK_THROWS_AS(resolve_suites({"nope"}), UsageError);
    CHECK_THROWS_AS(resolve_suites({}), UsageError);
}

TEST_CASE("runs are deterministic for a fixed seed") {
    RunConfig config;
    config.suites = resolve_suites({"galilei", "rotations"});
    const auto a = report_document(config, run(config)).dump();
    const auto b = report_document(config, run(config)).dump();
    CHECK(a == b);

    config.seed = 7;
    const auto c = run(config);
    CHECK(c.all_passed());
    CHECK(report_document(config, c).dump() != a);
}

TEST_CASE("tolerance scaling and validation") {
    RunConfig config;
    config.suites = {"rotations"};
    config.tol = 1e-20;
    CHECK_FALSE(run(config).all_passed());
    config.tol = -1.0;
    CHECK_THROWS_AS(run(config), UsageError);
    config.tol = 1e-9;
    config.samples = 0;
    CHECK_THROWS_AS(run(config), UsageError);
}

TEST_CASE("report document shape") {
    RunConfig config;
    config.suites = {"rotations"};
    const auto doc = report_document(config, run(config));
    CHECK(doc["version"] == "1");
    CHECK(doc["config"]["seed"] == 42);
    CHECK(doc["config"]["suites"].size() == 1);
    REQUIRE(doc["reports"].size() == 1);
    for (const auto& c : doc["reports"][0]["checks"]) {
        CHECK(c.contains("paper_ref"));
        CHECK(c["elapsed_ms"] == 0);
    }
}

TEST_CASE("algebra and graph exports") {
    const auto a = algebra_to_json(liealg::poincare_algebra());
    CHECK(a["basis"].size() == 10);
    bool found = false;
    for (const auto& b : a["brackets"])
        if (b["a"] == "K1" && b["b"] == "K2") {
            found = true;
            CHECK(b["out"][0]["gen"] == "J3");
            CHECK(b["out"][0]["coeff"] == -1);
        }
    CHECK(found);

    const auto g = fullerene::build_truncated_icosahedron();
    const auto j = graph_to_json(g, fullerene::kekule(g));
    CHECK(j["vertices"].size() == 60);
    CHECK(j["edges"].size() == 90);
    std::size_t doubles = 0;
    for (const auto& [key, value] : j["bonds"].items()) doubles += value == "double";
    CHECK(doubles == 30);
}

TEST_CASE("group elements round-trip through JSON") {
    const spacetime::GalileiElement g(spacetime::rotation(spacetime::Vec3::UnitZ(), 0.4), {0.1, 0.2, 0.3},
                                      {1, 2, 3}, 0.5);
    CHECK(spacetime::parameter_distance(galilei_from_json(element_to_json(g)), g) == 0.0);
    const spacetime::PoincareElement p({1, 0, 0}, 0.2, {0.3, 0.1, 0.0}, spacetime::Mat3::Identity());
    CHECK(spacetime::parameter_distance(poincare_from_json(element_to_json(p)), p) == 0.0);

    CHECK_THROWS_AS(galilei_from_json(Json::parse(R"({"galilei": {"R": 1}})")), ParameterError);
    CHECK_THROWS_AS(poincare_from_json(Json::object()), ParameterError);
    auto fast = element_to_json(p);
    fast["poincare"]["v"] = {1.5, 0.0, 0.0};
    CHECK_THROWS_AS(poincare_from_json(fast), ParameterError);
}

TEST_CASE("unwritable paths raise an I/O error") {
    CHECK_THROWS_AS(write_file("/nonexistent-dir/x.json", "{}"), IoError);
}
