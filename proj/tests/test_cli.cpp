// Copyright 2026 The magnon-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnon/cli.hpp"

using namespace magnon;
using Catch::Matchers::ContainsSubstring;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace

TEST_CASE("check subcommand passes sampled members and reports envelope fields") {
    const CliResult r = run({"check", "--family", "teleport", "--sample", "--seed", "3",
                             "--reproducible"});
    CAPTURE(r.out, r.err);
    REQUIRE(r.code == 0);
    const nlohmann::json j = r.json();
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("subcommand") == "check");
    CHECK(j.at("pass") == true);
    CHECK(j.contains("interpretation"));
    CHECK(j.contains("residuals"));
    CHECK(j.at("config").at("seed") == 3);
    CHECK_FALSE(j.contains("generated_at"));

    const CliResult stamped = run({"check", "--family", "teleport", "--sample"});
    CHECK(stamped.code == 0);
    CHECK(stamped.json().contains("generated_at"));
}

TEST_CASE("uniform amplitudes fail checks and the failing relations are named") {
    SECTION("json output") {
        const CliResult r = run({"check", "--family", "dense", "--amplitudes", "uniform",
                                 "--reproducible"});
        REQUIRE(r.code == 1);
        const nlohmann::json j = r.json();
        CHECK(j.at("pass") == false);
        const auto failing = j.at("failing").get<std::vector<std::string>>();
        CHECK(std::count(failing.begin(), failing.end(), "sum_balance_110_011") == 1);
        CHECK(std::count(failing.begin(), failing.end(), "w100_zero") == 1);
    }

    SECTION("text output") {
        const CliResult r = run({"check", "--family", "dense", "--amplitudes", "uniform",
                                 "--format", "text", "--reproducible"});
        REQUIRE(r.code == 1);
        CHECK_THAT(r.out, ContainsSubstring("failing relations:"));
        CHECK_THAT(r.out, ContainsSubstring("sum_balance_110_011"));
        CHECK_THAT(r.out, ContainsSubstring("w100_zero"));
        CHECK_THAT(r.out, ContainsSubstring("[FAIL]"));
    }
}

TEST_CASE("usage errors exit with code 2") {
    // No amplitude source.
    CHECK(run({"check", "--family", "teleport"}).code == 2);
    // Two amplitude sources.
    CHECK(run({"check", "--family", "teleport", "--sample", "--amplitudes", "uniform"}).code ==
          2);
    // Unknown flag.
    CHECK(run({"check", "--family", "teleport", "--sample", "--bogus"}).code == 2);
    // Unknown family value.
    CHECK(run({"check", "--family", "nope", "--sample"}).code == 2);
    // Missing subcommand.
    CHECK(run({}).code == 2);
    // Malformed inline JSON.
    const CliResult bad = run({"check", "--family", "teleport", "--amplitudes", "{not json"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    // Missing amplitude file.
    CHECK(run({"check", "--family", "teleport", "--amplitudes", "@/no/such/file.json"}).code ==
          2);
}

TEST_CASE("help is printed on request") {
    const CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("check"));
    CHECK_THAT(r.out, ContainsSubstring("teleport"));
    CHECK_THAT(r.out, ContainsSubstring("resolve-eq13"));
}

TEST_CASE("teleport subcommand runs sampled channels end to end") {
    const CliResult r = run({"teleport", "--sample", "--seed", "7", "--trials", "3",
                             "--reproducible"});
    CAPTURE(r.out, r.err);
    REQUIRE(r.code == 0);
    const nlohmann::json j = r.json();
    CHECK(j.at("subcommand") == "teleport");
    CHECK(j.at("pass") == true);
    CHECK(j.at("trials") == 3);
    CHECK(j.at("branches").size() == 16);
    CHECK(j.at("min_fidelity").get<double>() >= 1.0 - 1e-9);
    CHECK(j.at("config").at("trials") == 3);
}

TEST_CASE("teleport subcommand fails loudly over the uniform channel") {
    const CliResult r = run({"teleport", "--amplitudes", "uniform", "--trials", "1",
                             "--reproducible"});
    REQUIRE(r.code == 1);
    const nlohmann::json j = r.json();
    CHECK(j.at("pass") == false);
    CHECK(j.contains("error"));
    const auto failing = j.at("failing").get<std::vector<std::string>>();
    CHECK(std::count(failing.begin(), failing.end(), "cross_bilinear") == 1);

    const CliResult text = run({"teleport", "--amplitudes", "uniform", "--trials", "1",
                                "--format", "text", "--reproducible"});
    CHECK(text.code == 1);
    CHECK_THAT(text.out, ContainsSubstring("cross_bilinear"));
}

TEST_CASE("dense subcommand validates capacity and the generation circuit") {
    const CliResult sampled = run({"dense", "--sample", "--seed", "5", "--reproducible"});
    CAPTURE(sampled.out, sampled.err);
    REQUIRE(sampled.code == 0);
    const nlohmann::json j = sampled.json();
    CHECK(j.at("pass") == true);
    CHECK(j.at("holevo_capacity").get<double>() == Catch::Approx(4.0).margin(1e-9));
    CHECK(j.at("distinguishability").get<double>() <= 1e-10);

    const CliResult drawn =
        run({"dense", "--sample", "--seed", "5", "--circuit", "as-drawn", "--reproducible"});
    REQUIRE(drawn.code == 1);
    CHECK(drawn.json().at("discrepancy") == true);
    CHECK_FALSE(drawn.json().at("discrepancy_detail").get<std::string>().empty());

    const CliResult fixed =
        run({"dense", "--sample", "--seed", "5", "--circuit", "corrected", "--reproducible"});
    REQUIRE(fixed.code == 0);
    CHECK(fixed.json().at("discrepancy") == false);
    CHECK(fixed.json().at("circuit").at("variant") == "corrected");

    CHECK(run({"dense", "--sample", "--circuit", "sideways"}).code == 2);
}

TEST_CASE("qis subcommand embeds the interpretation") {
    const CliResult r = run({"qis", "--sample", "--seed", "2", "--trials", "2",
                             "--reproducible"});
    CAPTURE(r.out, r.err);
    REQUIRE(r.code == 0);
    const nlohmann::json j = r.json();
    CHECK(j.at("pass") == true);
    CHECK(j.at("interpretation") == "equal-only");
    CHECK(j.at("branches").size() == 16);
}

TEST_CASE("sample subcommand respects the nondegeneracy flag") {
    const CliResult ok = run({"sample", "--family", "qis", "--seed", "4", "--reproducible"});
    REQUIRE(ok.code == 0);
    CHECK(ok.json().at("amplitudes").contains("w110"));

    const CliResult infeasible = run({"sample", "--family", "qis", "--interpretation",
                                      "both-zero", "--require-nondegenerate",
                                      "--reproducible"});
    CHECK(infeasible.code == 1);
    CHECK(infeasible.json().at("pass") == false);
    CHECK(infeasible.json().contains("error"));
}

TEST_CASE("evolve subcommand reports the frozen generation data") {
    const CliResult r = run({"evolve", "--j", "1.0", "--reproducible"});
    CAPTURE(r.out, r.err);
    REQUIRE(r.code == 0);
    const nlohmann::json j = r.json();
    CHECK(j.at("pass") == true);
    CHECK(j.at("one_magnon_weight").get<double>() == Catch::Approx(1.0).margin(1e-10));
    CHECK(j.at("condition_residual").get<double>() ==
          Catch::Approx(11.0 / 18.0).margin(1e-10));
    CHECK(j.at("t_star").get<double>() == Catch::Approx(0.9636456637512208).margin(1e-12));

    CHECK(run({"evolve", "--j", "0"}).code == 2);
}

TEST_CASE("resolve-eq13 emits a deterministic verdict") {
    const CliResult a = run({"resolve-eq13", "--seed-count", "4", "--reproducible"});
    CAPTURE(a.out, a.err);
    REQUIRE(a.code == 0);
    const nlohmann::json j = a.json();
    CHECK(j.at("verdict") == "equal-only");
    CHECK(j.at("evidence").size() == 2);

    const CliResult b = run({"resolve-eq13", "--seed-count", "4", "--reproducible"});
    CHECK(a.out == b.out);
}

TEST_CASE("reproducible runs are byte-identical") {
    const std::vector<std::string> args = {"teleport", "--sample", "--seed", "11", "--trials",
                                           "2", "--reproducible"};
    const CliResult a = run(args);
    const CliResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("amplitudes can come from a file and reports can go to a file") {
    const std::string in_path = "cli_test_amplitudes.json";
    const std::string out_path = "cli_test_report.json";
    {
        const CliResult sample =
            run({"sample", "--family", "dense", "--seed", "9", "--reproducible"});
        REQUIRE(sample.code == 0);
        std::ofstream f(in_path);
        f << sample.json().at("amplitudes").dump();
    }

    const CliResult r = run({"check", "--family", "dense", "--amplitudes", "@" + in_path,
                             "--output", out_path, "--reproducible"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    std::ifstream f(out_path);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j.at("pass") == true);
    CHECK(j.at("config").at("amplitude_source") == "@" + in_path);

    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
}
