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

#ifndef GATECAP_ENTCAP_HPP
#define GATECAP_ENTCAP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gatecap/gates.hpp"
#include "gatecap/qalg.hpp"

namespace gatecap {

struct EntCapConfig {
    // Ancilla dimensions (nA, nB); 0 means no ancilla, -1 means default
    // (= the gate dimension on that side, enough to reach the supremum
    // for every builtin gate).
    int ancilla_a = -1;
    int ancilla_b = -1;
    int restarts = 16;
    int max_iterations = 2000;
    double gradient_tolerance = 1e-8;
    std::uint64_t seed = 0;
    // 0 = one worker per hardware thread. Thread count never affects results.
    int threads = 0;
    // Extra deterministic starting vectors in optimizer coordinates
    // (length 2 * state dimension), appended after the built-in starts.
    // Used for warm starts by ancilla_sweep and hamcap.
    std::vector<Eigen::VectorXd> warm_starts;
};

struct EntCapResult {
    // Best found value of E(U psi) - E(psi): a certified lower bound on the
    // true supremum (optimization can only undershoot).
    double value = 0.0;
    StateVector optimal_input;
    double input_entanglement = 0.0;
    double output_entanglement = 0.0;
    std::vector<double> per_restart_values;
    bool converged = false;
    std::uint64_t seed = 0;
};

// Resolves a requested ancilla dimension: -1 means the gate dimension on
// that side, 0 (no ancilla) becomes a trivial one-dimensional subsystem.
int resolved_ancilla(int requested, int gate_dim);

// Input layout used by the optimizer: [A(dA), A'(nA) | B(dB), B'(nB)] with
// the cut (A A' | B B').
std::vector<Subsystem> entcap_layout(const BipartiteGate &gate, int ancilla_a, int ancilla_b);

// E(U_{AB} psi) - E(psi) across the cut, for a state whose layout contains
// labels A and B with dims matching the gate.
double delta_e_fixed_input(const BipartiteGate &gate, const StateVector &psi);

// Multi-restart local maximization over pure inputs with ancillas. Restart 0
// is always the deterministic double-EPR start |Phi_kA>_{AA'} |Phi_kB>_{BB'}
// (k = min(dim, ancilla)); the remaining restarts use seeded Haar states.
EntCapResult optimize_entcap(const BipartiteGate &gate, const EntCapConfig &cfg);

// Entanglement-destroying capacity: optimize_entcap of the adjoint gate.
EntCapResult destroying_capacity(const BipartiteGate &gate, const EntCapConfig &cfg);

// Capacity optimum e_n for ancilla dims (n, n) over an ascending list, each
// level warm-started with the previous optimum embedded in the larger space.
std::vector<std::pair<int, double>> ancilla_sweep(const BipartiteGate &gate,
                                                  const std::vector<int> &dims_list,
                                                  const EntCapConfig &cfg);

}  // namespace gatecap

#endif
