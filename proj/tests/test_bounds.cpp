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

#include <limits>
#include <vector>

#include "doctest.h"
#include "gatecap/bounds.hpp"
#include "gatecap/gates.hpp"
#include "gatecap/qalg.hpp"
#include "gatecap/rng.hpp"
#include "test_util.hpp"

using namespace gatecap;

namespace {

BoundsComputed cnot_computed() {
    BoundsComputed c;
    c.delta_e = 1.0;
    c.delta_e_adjoint = 1.0;
    c.delta_chi = 1.0;
    c.schmidt_number = 2;
    c.schmidt_lower = 1.0;
    c.schmidt_upper = 1.0;
    c.ancilla_a = 2;
    c.ancilla_b = 2;
    return c;
}

BipartiteGate local_gate() {
    Matrix u = haar_random_unitary(2, 71);
    Matrix v = haar_random_unitary(2, 72);
    return make_bipartite_gate(kron(u, v), 2, 2, "local");
}

std::vector<std::string> check_names(const BoundsReport &report) {
    std::vector<std::string> names;
    for (const BoundCheck &check : report.checks) {
        names.push_back(check.name);
    }
    return names;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("cnot satisfies every check") {
    BoundsReport report = check_bounds(cnot(), cnot_computed());
    CHECK(report.gate_name == "cnot");
    CHECK(report.dim_a == 2);
    CHECK(report.dim_b == 2);

    std::vector<std::string> expected = {
        "entcap_le_log2_schmidt",     "schmidt_entropy_le_entcap",
        "entcap_le_double_teleportation", "holevo_le_double_teleportation",
        "holevo_le_entcap_sum",       "nonlocality_nonlocal",
    };
    CHECK(check_names(report) == expected);
    for (const BoundCheck &check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.satisfied);
        CHECK(check.relation == "<=");
        CHECK(check.note.empty());
    }

    // Double teleportation ceiling for 2x2: 2 log2(2) = 2.
    CHECK_NEAR(report.checks[2].lhs, 1.0, 1e-12);
    CHECK_NEAR(report.checks[2].rhs, 2.0, 1e-12);

    REQUIRE(report.ceilings.size() == 1);
    CHECK(report.ceilings[0].name == "unassisted_total_le_entcap");
    CHECK_NEAR(report.ceilings[0].value, 1.0, 1e-12);

    CHECK(!has_internal_violation(report));
}

TEST_CASE("local gate takes the local branch of the nonlocality check") {
    BoundsComputed c;
    c.delta_e = 0.0;
    c.delta_e_adjoint = 0.0;
    c.delta_chi = 0.0;
    c.schmidt_number = 1;
    c.schmidt_lower = 0.0;
    c.schmidt_upper = 0.0;
    c.ancilla_a = 2;
    c.ancilla_b = 2;
    BoundsReport report = check_bounds(local_gate(), c);
    REQUIRE(report.checks.size() == 6);
    CHECK(report.checks[5].name == "nonlocality_local");
    for (const BoundCheck &check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.satisfied);
    }
    CHECK(!has_internal_violation(report));
}

TEST_CASE("swap saturates the teleportation bound without slack trouble") {
    BoundsComputed c;
    c.delta_e = 2.0;
    c.delta_e_adjoint = 2.0;
    c.delta_chi = 2.0;
    c.schmidt_number = 4;
    c.schmidt_lower = 2.0;
    c.schmidt_upper = 2.0;
    c.ancilla_a = 2;
    c.ancilla_b = 2;
    BoundsReport report = check_bounds(swap_gate(2), c);
    for (const BoundCheck &check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.satisfied);
    }
    CHECK_NEAR(report.checks[2].lhs, 2.0, 1e-12);
    CHECK_NEAR(report.checks[2].rhs, 2.0, 1e-12);
    CHECK(!has_internal_violation(report));
}

TEST_CASE("an exact-RHS failure certifies an internal error") {
    BoundsComputed c = cnot_computed();
    c.delta_e = 1.5;  // above log2 Sch = 1
    BoundsReport report = check_bounds(cnot(), c);
    CHECK(!report.checks[0].satisfied);
    CHECK(report.checks[0].note.empty());
    CHECK(has_internal_violation(report));
}

TEST_CASE("optimizer-RHS failures are inconclusive, not internal") {
    BoundsComputed c = cnot_computed();
    c.delta_e = 0.5;
    c.delta_e_adjoint = 0.5;
    c.delta_chi = 1.5;
    BoundsReport report = check_bounds(cnot(), c);

    // (b) schmidt_lower 1.0 > delta_e 0.5 and (e) 1.5 > 1.0 + 2 * slack fail.
    CHECK(!report.checks[1].satisfied);
    CHECK(report.checks[1].note == "inconclusive: RHS under-optimized");
    CHECK(!report.checks[4].satisfied);
    CHECK(report.checks[4].note == "inconclusive: RHS under-optimized");

    CHECK(report.checks[0].satisfied);
    CHECK(report.checks[2].satisfied);
    CHECK(report.checks[3].satisfied);
    CHECK(!has_internal_violation(report));
}

TEST_CASE("partial ancillas drop the lower-bound checks") {
    BoundsComputed c = cnot_computed();
    c.ancilla_a = 1;
    c.ancilla_b = 1;
    BoundsReport report = check_bounds(cnot(), c);
    std::vector<std::string> expected = {
        "entcap_le_log2_schmidt",
        "entcap_le_double_teleportation",
        "holevo_le_double_teleportation",
        "holevo_le_entcap_sum",
    };
    CHECK(check_names(report) == expected);
}

TEST_CASE("non-finite and missing inputs are rejected") {
    BoundsComputed c = cnot_computed();
    c.delta_chi = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(check_bounds(cnot(), c), doctest::Contains("delta_chi"),
                         std::invalid_argument);

    c = cnot_computed();
    c.delta_e = std::numeric_limits<double>::infinity();
    CHECK_THROWS_WITH_AS(check_bounds(cnot(), c), doctest::Contains("delta_e"),
                         std::invalid_argument);

    c = cnot_computed();
    c.schmidt_number = 0;
    CHECK_THROWS_WITH_AS(check_bounds(cnot(), c), doctest::Contains("schmidt_number"),
                         std::invalid_argument);

    CHECK_THROWS_WITH_AS(check_bounds(cnot(), cnot_computed(), -1.0),
                         doctest::Contains("optimizer_slack"), std::invalid_argument);
}

TEST_CASE("computed values are echoed back in the report") {
    BoundsComputed c = cnot_computed();
    BoundsReport report = check_bounds(cnot(), c);
    CHECK(report.computed.delta_e == c.delta_e);
    CHECK(report.computed.delta_chi == c.delta_chi);
    CHECK(report.computed.schmidt_number == c.schmidt_number);
    CHECK(report.computed.ancilla_a == c.ancilla_a);
}

}  // TEST_SUITE
