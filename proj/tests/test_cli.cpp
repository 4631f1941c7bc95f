// Copyright 2026 The gatecap Authors
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

#include <cmath>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gatecap/gates.hpp"
#include "gatecap/report.hpp"
#include "schema_check.hpp"
#include "test_util.hpp"

using namespace gatecap;
using testutil::run_cli;

TEST_SUITE("cli") {

TEST_CASE("--version prints the tool version") {
    auto r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.1.0") != std::string::npos);
}

TEST_CASE("schmidt reports the cnot decomposition") {
    auto r = run_cli("schmidt --gate cnot");
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.output);
    CHECK(report["command"] == "schmidt");
    CHECK(report["gate"]["name"] == "cnot");
    const Json &schmidt = report["results"]["schmidt"];
    CHECK(schmidt["schmidt_number"] == 2);
    CHECK(std::abs(schmidt["coefficients"][0].get<double>() - std::sqrt(2.0)) <= 1e-9);
    CHECK(std::abs(schmidt["entropy_lower_bound"].get<double>() - 1.0) <= 1e-9);
    CHECK(std::abs(schmidt["log2_schmidt_upper_bound"].get<double>() - 1.0) <= 1e-12);
    CHECK(testutil::schema_errors(testutil::load_report_schema(), report).empty());
}

TEST_CASE("entcap finds the cnot capacity") {
    auto r = run_cli("entcap --gate cnot --restarts 4");
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.output);
    CHECK(report["config"]["ancilla_a"] == 2);
    CHECK(report["config"]["ancilla_b"] == 2);
    const Json &entcap = report["results"]["entcap"];
    CHECK(entcap["value_is_lower_bound"] == true);
    CHECK(std::abs(entcap["value"].get<double>() - 1.0) <= 1e-9);
    CHECK(testutil::schema_errors(testutil::load_report_schema(), report).empty());
}

TEST_CASE("results are byte-stable across identical runs") {
    std::string cmd = "entcap --gate j --restarts 3 --max-iterations 200 --seed 5";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    Json a = Json::parse(first.output);
    Json b = Json::parse(second.output);
    CHECK(a["results"].dump() == b["results"].dump());
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/gatecap_test_cli_out.json";
    auto r = run_cli("entcap --gate cnot --restarts 2 --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    Json on_disk = Json::parse(in);
    Json on_stdout = Json::parse(r.output);
    CHECK(on_disk["results"].dump() == on_stdout["results"].dump());
    CHECK(testutil::schema_errors(testutil::load_report_schema(), on_disk).empty());
}

TEST_CASE("file gates round-trip through the report descriptor") {
    std::string first_path =
        testutil::write_temp_file("cli_gate_1.json", matrix_to_json(j_gate().matrix, 2, 2));
    auto first = run_cli("schmidt --gate file:" + first_path);
    REQUIRE(first.exit_code == 0);
    Json report1 = Json::parse(first.output);
    CHECK(report1["gate"]["kind"] == "file");
    CHECK(report1["gate"]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

    // Feed the embedded matrix back in as a fresh gate file.
    std::string second_path =
        testutil::write_temp_file("cli_gate_2.json", report1["gate"]["matrix"].dump());
    auto second = run_cli("schmidt --gate file:" + second_path);
    REQUIRE(second.exit_code == 0);
    Json report2 = Json::parse(second.output);
    CHECK(report1["results"]["schmidt"].dump() == report2["results"]["schmidt"].dump());
}

TEST_CASE("bad invocations exit with code 1") {
    auto unknown_tag = run_cli("schmidt --gate nope", /*merge_stderr=*/true);
    CHECK(unknown_tag.exit_code == 1);
    CHECK(unknown_tag.output.find("unknown gate tag 'nope'") != std::string::npos);

    CHECK(run_cli("hamcap --ham zz --direction backward").exit_code == 1);

    auto bad_ancilla = run_cli("entcap --gate cnot --ancilla 2", /*merge_stderr=*/true);
    CHECK(bad_ancilla.exit_code == 1);
    CHECK(bad_ancilla.output.find("--ancilla needs exactly two values") != std::string::npos);

    CHECK(run_cli("entcap --gate cnot --restarts 0").exit_code == 1);
    auto bad_msg = run_cli("proto --name cnot --msg 31", /*merge_stderr=*/true);
    CHECK(bad_msg.exit_code == 1);
    CHECK(bad_msg.output.find("must be 0 or 1") != std::string::npos);

    CHECK(run_cli("schmidt").exit_code == 1);
    auto missing_file = run_cli("entcap --gate file:/nonexistent_gate.json",
                                /*merge_stderr=*/true);
    CHECK(missing_file.exit_code == 1);
    CHECK(missing_file.output.find("cannot open matrix file") != std::string::npos);
}

TEST_CASE("table format brackets sections unless plain") {
    auto table = run_cli("schmidt --gate cnot --format table");
    REQUIRE(table.exit_code == 0);
    CHECK(table.output.find("[report]") != std::string::npos);
    CHECK(table.output.find("[report.results.schmidt]") != std::string::npos);
    CHECK(table.output.rfind("{", 0) != 0);

    auto plain = run_cli("schmidt --gate cnot --format table --plain");
    REQUIRE(plain.exit_code == 0);
    CHECK(plain.output.find("[report]") == std::string::npos);
    CHECK(plain.output.find("report:") != std::string::npos);
}

TEST_CASE("proto decodes messages and reports resources") {
    auto j = run_cli("proto --name j --msg 01");
    REQUIRE(j.exit_code == 0);
    Json j_report = Json::parse(j.output);
    CHECK(j_report["results"]["proto"]["decoded"] == Json::array({0, 1}));
    CHECK(j_report["results"]["proto"]["pass"] == true);
    CHECK(j_report["results"]["proto"]["resources"].is_null());

    auto teleport = run_cli("proto --name teleport --gate swap:2 --seed 3");
    REQUIRE(teleport.exit_code == 0);
    Json t_report = Json::parse(teleport.output);
    CHECK(t_report["results"]["proto"]["pass"] == true);
    CHECK(t_report["results"]["proto"]["resources"]["epr_dim"] == 2);
}

TEST_CASE("ecap-sweep lists one level per ancilla dimension") {
    auto r = run_cli("ecap-sweep --gate cnot --dims 1,2 --restarts 4");
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.output);
    CHECK(report["config"]["dims"] == Json::array({1, 2}));
    const Json &sweep = report["results"]["sweep"];
    REQUIRE(sweep.size() == 2);
    CHECK(sweep[0]["ancilla"] == 1);
    CHECK(sweep[1]["ancilla"] == 2);
    CHECK(std::abs(sweep[0]["value"].get<double>() - 1.0) <= 1e-6);
    CHECK(std::abs(sweep[1]["value"].get<double>() - 1.0) <= 1e-6);
}

TEST_CASE("hamcap reads hamiltonians from files") {
    std::string path = testutil::write_temp_file(
        "cli_ham.json", matrix_to_json(zz_hamiltonian().entries, 2, 2));
    auto r = run_cli("hamcap --ham file:" + path + " --s-grid 0.1,0.05 --restarts 4");
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.output);
    CHECK(report["gate"]["kind"] == "file");
    const Json &hamcap = report["results"]["hamcap"];
    CHECK(hamcap["extrapolation_method"] == "richardson-2pt");
    REQUIRE(hamcap["samples"].size() == 2);
    CHECK(std::abs(hamcap["rate"].get<double>() - 1.9135786324440285) <= 2e-2);
}

}  // TEST_SUITE
