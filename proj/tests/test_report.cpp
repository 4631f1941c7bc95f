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

#include <regex>
#include <string>
#include <vector>

#include "doctest.h"
#include "gatecap/report.hpp"
#include "schema_check.hpp"
#include "test_util.hpp"

using namespace gatecap;

namespace {

std::vector<std::string> keys_of(const Json &doc) {
    std::vector<std::string> keys;
    for (const auto &[key, value] : doc.items()) {
        keys.push_back(key);
    }
    return keys;
}

EntCapResult small_entcap_run() {
    EntCapConfig cfg;
    cfg.restarts = 2;
    cfg.max_iterations = 150;
    return optimize_entcap(cnot(), cfg);
}

Json small_report() {
    Json config;
    config["restarts"] = 2;
    return make_report("entcap", gate_descriptor_json(cnot()), config,
                       entcap_result_json(small_entcap_run()), "2026-01-02T03:04:05Z",
                       "2026-01-02T03:04:06Z");
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("envelope key order is fixed") {
    Json report = small_report();
    std::vector<std::string> expected = {"schema_version", "tool_version", "command",
                                         "gate",           "config",       "results",
                                         "timestamps"};
    CHECK(keys_of(report) == expected);
    CHECK(report["schema_version"] == "1");
    CHECK(report["tool_version"] == "0.1.0");
    CHECK(report["command"] == "entcap");
    CHECK(report["timestamps"]["started"] == "2026-01-02T03:04:05Z");
    CHECK(report["timestamps"]["finished"] == "2026-01-02T03:04:06Z");
}

TEST_CASE("entcap results declare themselves lower bounds") {
    Json doc = entcap_result_json(small_entcap_run());
    std::vector<std::string> expected = {"value",     "value_is_lower_bound",
                                         "input_entanglement", "output_entanglement",
                                         "converged", "seed",
                                         "per_restart_values", "optimal_input"};
    CHECK(keys_of(doc) == expected);
    CHECK(doc["value_is_lower_bound"] == true);
    CHECK(doc["per_restart_values"].size() == 2);

    const Json &layout = doc["optimal_input"]["layout"];
    REQUIRE(layout.size() == 4);
    for (const auto &entry : layout) {
        CHECK(entry.contains("label"));
        CHECK(entry.contains("dim"));
        CHECK((entry["side"] == "alice" || entry["side"] == "bob"));
    }
    int dim = 1;
    for (const auto &entry : layout) {
        dim *= entry["dim"].get<int>();
    }
    CHECK(doc["optimal_input"]["amplitudes"].size() == static_cast<std::size_t>(dim));
}

TEST_CASE("identical runs serialize byte-identically") {
    std::string a = entcap_result_json(small_entcap_run()).dump();
    std::string b = entcap_result_json(small_entcap_run()).dump();
    CHECK(a == b);
}

TEST_CASE("generated reports validate against the shipped schema") {
    Json schema = testutil::load_report_schema();

    Json entcap_report = small_report();
    CHECK(testutil::schema_errors(schema, entcap_report).empty());

    // A file-sourced gate exercises the source/digest/matrix branch.
    std::string path =
        testutil::write_temp_file("report_gate.json", matrix_to_json(cp(3).matrix, 3, 3));
    BipartiteGate from_file = gate_from_file(path);
    auto [lower, upper] = schmidt_entropy_bound(from_file);
    OperatorSchmidt dec = operator_schmidt(from_file);
    Json schmidt_report =
        make_report("schmidt", gate_descriptor_json(from_file, path), Json::object(),
                    schmidt_result_json(dec, lower, upper, schmidt_number(dec)),
                    iso8601_utc_now(), iso8601_utc_now());
    auto errors = testutil::schema_errors(schema, schmidt_report);
    CAPTURE(errors.size());
    CHECK(errors.empty());

    std::vector<Subsystem> layout{Subsystem{"A", 2, Side::alice},
                                  Subsystem{"B", 2, Side::bob}};
    ProtocolOutcome outcome = teleport_simulate(cnot(), basis_state(layout, {0, 0}));
    Json proto_report =
        make_report("proto", gate_descriptor_json(cnot()), Json::object(),
                    protocol_outcome_json(outcome), iso8601_utc_now(), iso8601_utc_now());
    CHECK(testutil::schema_errors(schema, proto_report).empty());
}

TEST_CASE("schema violations are caught by the checker") {
    Json schema = testutil::load_report_schema();
    Json report = small_report();
    report.erase("results");
    report["schema_version"] = "999";
    auto errors = testutil::schema_errors(schema, report);
    CHECK(errors.size() == 2);
}

TEST_CASE("table rendering brackets sections unless plain") {
    Json report = small_report();
    std::string table = render_table(report);
    CHECK(table.find("[report]") != std::string::npos);
    CHECK(table.find("[report.gate]") != std::string::npos);
    CHECK(table.find("schema_version") != std::string::npos);

    std::string plain = render_table(report, true);
    CHECK(plain.find("[report]") == std::string::npos);
    CHECK(plain.find("report:") != std::string::npos);
    CHECK(plain.find("report.gate:") != std::string::npos);
}

TEST_CASE("table rendering rounds numbers to six decimals") {
    Json doc;
    doc["value"] = 1.23456789;
    std::string table = render_table(doc);
    CHECK(table.find("1.234568") != std::string::npos);
}

TEST_CASE("timestamps are ISO-8601 UTC") {
    std::regex pattern("^[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}Z$");
    CHECK(std::regex_match(iso8601_utc_now(), pattern));
}

TEST_CASE("gate descriptors distinguish builtin from file gates") {
    Json builtin = gate_descriptor_json(cnot());
    std::vector<std::string> expected = {"kind", "name", "params", "dims"};
    CHECK(keys_of(builtin) == expected);
    CHECK(builtin["kind"] == "builtin");
    CHECK(builtin["name"] == "cnot");
    CHECK(builtin["params"].empty());
    CHECK(builtin["dims"] == Json::array({2, 2}));

    std::string path =
        testutil::write_temp_file("descriptor_gate.json", matrix_to_json(cnot().matrix, 2, 2));
    BipartiteGate gate = gate_from_file(path);
    Json from_file = gate_descriptor_json(gate, path);
    CHECK(from_file["kind"] == "file");
    CHECK(from_file["source"] == path);
    CHECK(from_file["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(from_file["matrix"] == Json::parse(matrix_to_json(gate.matrix, 2, 2)));
}

TEST_CASE("hamiltonian descriptors follow the same shape") {
    Json doc = hamiltonian_descriptor_json(zz_hamiltonian());
    CHECK(doc["kind"] == "builtin");
    CHECK(doc["name"] == "zz");
    CHECK(doc["params"].is_array());
    CHECK(doc["dims"] == Json::array({2, 2}));
}

TEST_CASE("protocol outcomes serialize resources or null") {
    Json without = protocol_outcome_json(cnot_two_way(0, 0));
    CHECK(without["resources"].is_null());
    CHECK(without["pass"] == true);
    CHECK(without["final_state"].contains("layout"));

    std::vector<Subsystem> layout{Subsystem{"A", 2, Side::alice},
                                  Subsystem{"B", 2, Side::bob}};
    ProtocolOutcome teleported = teleport_simulate(cnot(), basis_state(layout, {0, 0}));
    Json with = protocol_outcome_json(teleported);
    CHECK(with["resources"]["epr_pairs"] == 2);
    CHECK(with["resources"]["epr_dim"] == 2);
}

TEST_CASE("bounds reports serialize every check field") {
    BoundsComputed computed;
    computed.delta_e = 1.0;
    computed.delta_e_adjoint = 1.0;
    computed.delta_chi = 1.0;
    computed.schmidt_number = 2;
    computed.schmidt_lower = 1.0;
    computed.schmidt_upper = 1.0;
    computed.ancilla_a = 2;
    computed.ancilla_b = 2;
    Json doc = bounds_report_json(check_bounds(cnot(), computed));
    REQUIRE(doc["checks"].size() == 6);
    std::vector<std::string> expected = {"name", "lhs",       "relation", "rhs",
                                         "slack", "satisfied", "note"};
    CHECK(keys_of(doc["checks"][0]) == expected);
    CHECK(doc["ceilings"][0]["name"] == "unassisted_total_le_entcap");
}

TEST_CASE("hamcap results mark the rate as a lower bound") {
    HamCapResult result;
    result.rate = 1.9;
    result.samples = {{0.1, 1.85, true}, {0.05, 1.88, true}};
    result.extrapolation_method = "richardson-2pt";
    result.residual = 1e-4;
    Json doc = hamcap_result_json(result);
    CHECK(doc["rate_is_lower_bound"] == true);
    CHECK(doc["extrapolation_method"] == "richardson-2pt");
    REQUIRE(doc["samples"].size() == 2);
    CHECK(doc["samples"][0]["s"] == 0.1);
    CHECK(doc["samples"][1]["converged"] == true);
}

TEST_CASE("holevo results serialize the optimal ensemble") {
    HolevoResult result;
    result.value = 1.0;
    result.chi_in = 0.0;
    result.chi_out = 1.0;
    result.converged = true;
    result.seed = 7;
    result.per_restart_values = {1.0};
    std::vector<Subsystem> layout{Subsystem{"A", 2, Side::alice}};
    result.optimal_ensemble.probs = {0.5, 0.5};
    result.optimal_ensemble.states = {basis_state(layout, {0}), basis_state(layout, {1})};
    Json doc = holevo_result_json(result);
    CHECK(doc["value_is_lower_bound"] == true);
    CHECK(doc["optimal_ensemble"]["probs"].size() == 2);
    CHECK(doc["optimal_ensemble"]["states"][1]["amplitudes"][1] == Json::array({1.0, 0.0}));
}

}  // TEST_SUITE
