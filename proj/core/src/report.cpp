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

#include "gatecap/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "gatecap/version.hpp"

namespace gatecap {

namespace {

Json complex_json(const Complex &z) {
    return Json::array({z.real(), z.imag()});
}

std::string side_name(Side side) {
    return side == Side::alice ? "alice" : "bob";
}

std::string format_number(const Json &v) {
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v.get<double>());
    return buf;
}

std::string format_scalar(const Json &v) {
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number()) {
        return format_number(v);
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

bool is_scalar(const Json &v) {
    return !v.is_object() && !v.is_array();
}

std::string format_inline(const Json &v) {
    if (is_scalar(v)) {
        return format_scalar(v);
    }
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_inline(v[i]);
    }
    out += "]";
    return out;
}

void render_section(const std::string &path, const Json &obj, std::ostringstream &out,
                    bool plain) {
    if (plain) {
        out << path << ":\n";
    } else {
        out << "[" << path << "]\n";
    }
    size_t width = 0;
    for (const auto &[key, value] : obj.items()) {
        width = std::max(width, key.size());
    }
    std::vector<std::pair<std::string, const Json *>> nested;
    for (const auto &[key, value] : obj.items()) {
        if (value.is_object()) {
            nested.emplace_back(key, &value);
            continue;
        }
        if (value.is_array() && !value.empty() && value[0].is_object()) {
            nested.emplace_back(key, &value);
            continue;
        }
        out << "  " << key << std::string(width - key.size() + 2, ' ') << format_inline(value)
            << "\n";
    }
    for (const auto &[key, value] : nested) {
        out << "\n";
        if (value->is_array()) {
            for (size_t i = 0; i < value->size(); ++i) {
                if (i > 0) {
                    out << "\n";
                }
                render_section(path + "." + key + "[" + std::to_string(i) + "]", (*value)[i],
                               out, plain);
            }
        } else {
            render_section(path + "." + key, *value, out, plain);
        }
    }
}

}  // namespace

Json gate_descriptor_json(const BipartiteGate &gate, const std::string &source_path) {
    Json doc;
    doc["kind"] = source_path.empty() ? "builtin" : "file";
    doc["name"] = gate.name;
    doc["params"] = gate.params;
    doc["dims"] = {gate.dim_a, gate.dim_b};
    if (!source_path.empty()) {
        doc["source"] = source_path;
        doc["digest"] = file_digest(source_path);
        doc["matrix"] = Json::parse(matrix_to_json(gate.matrix, gate.dim_a, gate.dim_b));
    }
    return doc;
}

Json hamiltonian_descriptor_json(const Hamiltonian &h, const std::string &source_path) {
    Json doc;
    doc["kind"] = source_path.empty() ? "builtin" : "file";
    doc["name"] = h.name;
    doc["params"] = Json::array();
    doc["dims"] = {h.dim_a, h.dim_b};
    if (!source_path.empty()) {
        doc["source"] = source_path;
        doc["digest"] = file_digest(source_path);
        doc["matrix"] = Json::parse(matrix_to_json(h.entries, h.dim_a, h.dim_b));
    }
    return doc;
}

Json layout_json(const std::vector<Subsystem> &layout) {
    Json out = Json::array();
    for (const auto &sub : layout) {
        Json entry;
        entry["label"] = sub.label;
        entry["dim"] = sub.dim;
        entry["side"] = side_name(sub.side);
        out.push_back(std::move(entry));
    }
    return out;
}

Json state_vector_json(const StateVector &psi) {
    Json doc;
    doc["layout"] = layout_json(psi.layout());
    Json amps = Json::array();
    for (int i = 0; i < psi.dim(); ++i) {
        amps.push_back(complex_json(psi.amplitudes()[i]));
    }
    doc["amplitudes"] = std::move(amps);
    return doc;
}

Json entcap_result_json(const EntCapResult &result) {
    Json doc;
    doc["value"] = result.value;
    doc["value_is_lower_bound"] = true;
    doc["input_entanglement"] = result.input_entanglement;
    doc["output_entanglement"] = result.output_entanglement;
    doc["converged"] = result.converged;
    doc["seed"] = result.seed;
    doc["per_restart_values"] = result.per_restart_values;
    doc["optimal_input"] = state_vector_json(result.optimal_input);
    return doc;
}

Json holevo_result_json(const HolevoResult &result) {
    Json doc;
    doc["value"] = result.value;
    doc["value_is_lower_bound"] = true;
    doc["chi_in"] = result.chi_in;
    doc["chi_out"] = result.chi_out;
    doc["converged"] = result.converged;
    doc["seed"] = result.seed;
    doc["per_restart_values"] = result.per_restart_values;
    Json ensemble;
    ensemble["probs"] = result.optimal_ensemble.probs;
    Json states = Json::array();
    for (const auto &state : result.optimal_ensemble.states) {
        states.push_back(state_vector_json(state));
    }
    ensemble["states"] = std::move(states);
    doc["optimal_ensemble"] = std::move(ensemble);
    return doc;
}

Json hamcap_result_json(const HamCapResult &result) {
    Json doc;
    doc["rate"] = result.rate;
    doc["rate_is_lower_bound"] = true;
    doc["extrapolation_method"] = result.extrapolation_method;
    doc["residual"] = result.residual;
    Json samples = Json::array();
    for (const auto &sample : result.samples) {
        Json entry;
        entry["s"] = sample.s;
        entry["rate"] = sample.rate;
        entry["converged"] = sample.converged;
        samples.push_back(std::move(entry));
    }
    doc["samples"] = std::move(samples);
    return doc;
}

Json schmidt_result_json(const OperatorSchmidt &dec, double lower, double upper,
                         int schmidt_num) {
    Json doc;
    doc["schmidt_number"] = schmidt_num;
    doc["coefficients"] =
        std::vector<double>(dec.coefficients.data(), dec.coefficients.data() + dec.coefficients.size());
    doc["entropy_lower_bound"] = lower;
    doc["log2_schmidt_upper_bound"] = upper;
    return doc;
}

Json bounds_report_json(const BoundsReport &report) {
    Json doc;
    doc["gate"] = report.gate_name;
    doc["dims"] = {report.dim_a, report.dim_b};
    Json computed;
    computed["delta_e"] = report.computed.delta_e;
    computed["delta_e_adjoint"] = report.computed.delta_e_adjoint;
    computed["delta_chi"] = report.computed.delta_chi;
    computed["schmidt_number"] = report.computed.schmidt_number;
    computed["schmidt_lower"] = report.computed.schmidt_lower;
    computed["schmidt_upper"] = report.computed.schmidt_upper;
    computed["ancilla_a"] = report.computed.ancilla_a;
    computed["ancilla_b"] = report.computed.ancilla_b;
    doc["computed"] = std::move(computed);
    Json checks = Json::array();
    for (const auto &check : report.checks) {
        Json entry;
        entry["name"] = check.name;
        entry["lhs"] = check.lhs;
        entry["relation"] = check.relation;
        entry["rhs"] = check.rhs;
        entry["slack"] = check.slack;
        entry["satisfied"] = check.satisfied;
        entry["note"] = check.note;
        checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
    Json ceilings = Json::array();
    for (const auto &ceiling : report.ceilings) {
        Json entry;
        entry["name"] = ceiling.name;
        entry["value"] = ceiling.value;
        ceilings.push_back(std::move(entry));
    }
    doc["ceilings"] = std::move(ceilings);
    return doc;
}

Json protocol_outcome_json(const ProtocolOutcome &outcome) {
    Json doc;
    doc["protocol"] = outcome.protocol;
    doc["inputs"] = outcome.inputs;
    doc["decoded"] = outcome.decoded;
    doc["fidelity_to_ideal"] = outcome.fidelity_to_ideal;
    doc["pass"] = outcome.pass;
    doc["final_state"] = state_vector_json(outcome.final_state);
    if (outcome.resources.has_value()) {
        Json ledger;
        ledger["epr_pairs"] = outcome.resources->epr_pairs;
        ledger["epr_dim"] = outcome.resources->epr_dim;
        ledger["cbits_forward"] = outcome.resources->cbits_forward;
        ledger["cbits_backward"] = outcome.resources->cbits_backward;
        doc["resources"] = std::move(ledger);
    } else {
        doc["resources"] = nullptr;
    }
    return doc;
}

Json make_report(const std::string &command, const Json &subject, const Json &config,
                 const Json &results, const std::string &started, const std::string &finished) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    doc["gate"] = subject;
    doc["config"] = config;
    doc["results"] = results;
    Json stamps;
    stamps["started"] = started;
    stamps["finished"] = finished;
    doc["timestamps"] = std::move(stamps);
    return doc;
}

std::string iso8601_utc_now() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string render_table(const Json &report, bool plain) {
    std::ostringstream out;
    if (!report.is_object()) {
        out << format_inline(report) << "\n";
        return out.str();
    }
    render_section("report", report, out, plain);
    return out.str();
}

}  // namespace gatecap
