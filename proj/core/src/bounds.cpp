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

#include "gatecap/bounds.hpp"

#include <cmath>

#include "gatecap/errors.hpp"

namespace gatecap {

namespace {

// Checks whose right-hand side is exact (not an optimizer output): a failure
// certifies an internal error rather than optimizer undershoot.
constexpr const char *kExactRhsChecks[] = {
    "entcap_le_log2_schmidt",
    "entcap_le_double_teleportation",
    "holevo_le_double_teleportation",
};

constexpr const char *kInconclusiveNote = "inconclusive: RHS under-optimized";

void require_finite(double value, const char *name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string("check_bounds: missing or non-finite input '") +
                                    name + "'");
    }
}

BoundCheck make_check(std::string name, double lhs, double rhs, double slack,
                      bool inconclusive_on_failure) {
    BoundCheck check;
    check.name = std::move(name);
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = slack;
    check.satisfied = lhs <= rhs + slack;
    if (!check.satisfied && inconclusive_on_failure) {
        check.note = kInconclusiveNote;
    }
    return check;
}

}  // namespace

BoundsReport check_bounds(const BipartiteGate &gate, const BoundsComputed &computed,
                          double optimizer_slack) {
    require_finite(computed.delta_e, "delta_e");
    require_finite(computed.delta_e_adjoint, "delta_e_adjoint");
    require_finite(computed.delta_chi, "delta_chi");
    require_finite(computed.schmidt_lower, "schmidt_lower");
    require_finite(computed.schmidt_upper, "schmidt_upper");
    if (computed.schmidt_number < 1) {
        throw std::invalid_argument("check_bounds: missing input 'schmidt_number'");
    }
    if (!(optimizer_slack >= 0.0)) {
        throw std::invalid_argument("check_bounds: optimizer_slack must be >= 0");
    }

    BoundsReport report;
    report.gate_name = gate.name;
    report.dim_a = gate.dim_a;
    report.dim_b = gate.dim_b;
    report.computed = computed;

    double teleport = 2.0 * std::log2(static_cast<double>(std::min(gate.dim_a, gate.dim_b)));
    bool ancillas_full =
        computed.ancilla_a >= gate.dim_a && computed.ancilla_b >= gate.dim_b;

    report.checks.push_back(
        make_check("entcap_le_log2_schmidt", computed.delta_e, computed.schmidt_upper, 1e-6,
                   false));
    if (ancillas_full) {
        report.checks.push_back(make_check("schmidt_entropy_le_entcap", computed.schmidt_lower,
                                           computed.delta_e, 1e-6, true));
    }
    report.checks.push_back(
        make_check("entcap_le_double_teleportation", computed.delta_e, teleport, 1e-6, false));
    report.checks.push_back(
        make_check("holevo_le_double_teleportation", computed.delta_chi, teleport, 1e-6, false));
    report.checks.push_back(make_check("holevo_le_entcap_sum", computed.delta_chi,
                                       computed.delta_e + computed.delta_e_adjoint,
                                       2.0 * optimizer_slack, true));
    if (ancillas_full) {
        if (computed.schmidt_number == 1) {
            // Local gate: the capacity must sit at zero (up to optimizer noise).
            report.checks.push_back(
                make_check("nonlocality_local", computed.delta_e, 0.0, optimizer_slack, false));
        } else {
            // Nonlocal gate: the capacity must clear the slack threshold.
            report.checks.push_back(make_check("nonlocality_nonlocal", optimizer_slack,
                                               computed.delta_e, 0.0, true));
        }
    }

    report.ceilings.push_back(BoundCeiling{"unassisted_total_le_entcap", computed.delta_e});
    return report;
}

bool has_internal_violation(const BoundsReport &report) {
    for (const auto &check : report.checks) {
        if (check.satisfied) {
            continue;
        }
        for (const char *name : kExactRhsChecks) {
            if (check.name == name) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace gatecap
