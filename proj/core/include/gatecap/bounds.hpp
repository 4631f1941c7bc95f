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

#ifndef GATECAP_BOUNDS_HPP
#define GATECAP_BOUNDS_HPP

#include <string>
#include <vector>

#include "gatecap/gates.hpp"

namespace gatecap {

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    std::string relation = "<=";
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = false;  // always exactly lhs <= rhs + slack
    // Empty, or "inconclusive: RHS under-optimized" when the right-hand side
    // is itself an optimizer output that may have undershot.
    std::string note;
};

struct BoundCeiling {
    std::string name;
    double value = 0.0;
};

struct BoundsComputed {
    double delta_e = 0.0;
    double delta_e_adjoint = 0.0;
    double delta_chi = 0.0;
    int schmidt_number = 0;
    double schmidt_lower = 0.0;
    double schmidt_upper = 0.0;
    // Ancilla dims the capacities were computed with; the Schmidt lower-bound
    // check and the nonlocality check require ancillas >= gate dims and are
    // omitted otherwise.
    int ancilla_a = 0;
    int ancilla_b = 0;
};

struct BoundsReport {
    std::string gate_name;
    int dim_a = 0;
    int dim_b = 0;
    BoundsComputed computed;
    std::vector<BoundCheck> checks;
    std::vector<BoundCeiling> ceilings;
};

// Assembles the consistency checks over the computed capacities:
//   (a) delta_e   <= log2 Sch(U)
//   (b) schmidt_lower <= delta_e          (ancillas >= dims only)
//   (c) delta_e   <= 2 log2 min(dA, dB)
//   (d) delta_chi <= 2 log2 min(dA, dB)
//   (e) delta_chi <= delta_e + delta_e_adjoint
//   (f) nonlocality: Sch > 1 iff delta_e above slack (ancillas >= dims only)
// plus the ceiling "C+ <= delta_e" with no computed left-hand side.
//
// optimizer_slack is the tolerance granted to optimizer outputs: checks with
// exact right-hand sides use a fixed 1e-6, check (e) uses 2 * optimizer_slack
// (both sides are optimizer outputs). Failures of checks whose RHS is an
// optimized quantity are annotated "inconclusive: RHS under-optimized";
// failures of (a), (c), (d) certify an internal error.
BoundsReport check_bounds(const BipartiteGate &gate, const BoundsComputed &computed,
                          double optimizer_slack = 1e-2);

// True when some check with an exact right-hand side ((a), (c) or (d)) failed.
bool has_internal_violation(const BoundsReport &report);

}  // namespace gatecap

#endif
