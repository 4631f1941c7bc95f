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

#ifndef GATECAP_REPORT_HPP
#define GATECAP_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "gatecap/bounds.hpp"
#include "gatecap/entcap.hpp"
#include "gatecap/hamcap.hpp"
#include "gatecap/holevo.hpp"
#include "gatecap/protosim.hpp"
#include "gatecap/schmidt.hpp"

namespace gatecap {

// Key order is fixed (ordered_json) so that reports with identical
// configuration and seeds serialize byte-identically apart from timestamps.
using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

Json gate_descriptor_json(const BipartiteGate &gate, const std::string &source_path = "");
Json hamiltonian_descriptor_json(const Hamiltonian &h, const std::string &source_path = "");

Json layout_json(const std::vector<Subsystem> &layout);
Json state_vector_json(const StateVector &psi);
Json entcap_result_json(const EntCapResult &result);
Json holevo_result_json(const HolevoResult &result);
Json hamcap_result_json(const HamCapResult &result);
Json schmidt_result_json(const OperatorSchmidt &dec, double lower, double upper,
                         int schmidt_num);
Json bounds_report_json(const BoundsReport &report);
Json protocol_outcome_json(const ProtocolOutcome &outcome);

// Full report envelope: schema_version, tool_version, command, gate, config,
// results, timestamps (ISO-8601 UTC).
Json make_report(const std::string &command, const Json &subject, const Json &config,
                 const Json &results, const std::string &started, const std::string &finished);

std::string iso8601_utc_now();

// Human-readable rendering of a report; numbers rounded to 6 decimals.
// plain = true drops the bracketed section decorations.
std::string render_table(const Json &report, bool plain = false);

}  // namespace gatecap

#endif
