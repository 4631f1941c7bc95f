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

#include "gatecap/protosim.hpp"

#include <cmath>
#include <numbers>

namespace gatecap {

namespace {

void require_bit(int value, const char *name) {
    if (value != 0 && value != 1) {
        throw std::invalid_argument(std::string(name) + " must be 0 or 1");
    }
}

// Generalized shift X|m> = |m+1 mod d>.
Matrix shift_power(int d, int k) {
    Matrix x = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        x((m + k) % d, m) = 1.0;
    }
    return x;
}

// Generalized clock Z|m> = omega^m |m>, omega = exp(2 pi i / d).
Matrix clock_power(int d, int k) {
    Matrix z = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        double angle = 2.0 * std::numbers::pi * k * m / d;
        z(m, m) = Complex(std::cos(angle), std::sin(angle));
    }
    return z;
}

// |Phi_pq> = (1/sqrt d) sum_m omega^{qm} |m, m+p>, as a joint-index ket.
Vector bell_ket(int d, int p, int q) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int m = 0; m < d; ++m) {
        double angle = 2.0 * std::numbers::pi * q * m / d;
        v[static_cast<Eigen::Index>(m) * d + (m + p) % d] =
            amp * Complex(std::cos(angle), std::sin(angle));
    }
    return v;
}

// Measurement by projection: the state must assign probability 1 (within
// 1e-10) to exactly one candidate reduction; returns its index.
int deterministic_outcome(const StateVector &psi, const std::string &label,
                          const std::vector<Vector> &candidates) {
    DensityMatrix rho = partial_trace(density_from_state(psi), {label});
    for (size_t i = 0; i < candidates.size(); ++i) {
        StateVector candidate(candidates[i], rho.layout());
        if (fidelity(candidate, rho) >= 1.0 - 1e-10) {
            return static_cast<int>(i);
        }
    }
    throw InternalError("protocol measurement on '" + label + "' is not deterministic");
}

Vector qubit_ket(int digit) {
    Vector v = Vector::Zero(2);
    v[digit] = 1.0;
    return v;
}

Vector dit_ket(int d, int digit) {
    Vector v = Vector::Zero(d);
    v[digit] = 1.0;
    return v;
}

Vector x_basis_ket(int sign_bit) {
    Vector v(2);
    v[0] = 1.0 / std::sqrt(2.0);
    v[1] = (sign_bit == 0 ? 1.0 : -1.0) / std::sqrt(2.0);
    return v;
}

}  // namespace

ProtocolOutcome cnot_two_way(int a, int b) {
    require_bit(a, "a");
    require_bit(b, "b");
    std::vector<Subsystem> layout{Subsystem{"A", 2, Side::alice}, Subsystem{"B", 2, Side::bob}};
    StateVector psi(phi_vector(2), layout);
    psi = apply_to_labels(shift_power(2, a), {"A"}, psi);
    psi = apply_to_labels(clock_power(2, b), {"B"}, psi);
    psi = apply_to_labels(cnot().matrix, {"A", "B"}, psi);

    int bob_decoded = deterministic_outcome(psi, "B", {qubit_ket(0), qubit_ket(1)});
    int alice_decoded = deterministic_outcome(psi, "A", {x_basis_ket(0), x_basis_ket(1)});

    Vector ideal(4);
    double amp = 1.0 / std::sqrt(2.0);
    ideal.setZero();
    ideal[0 * 2 + a] = amp;
    ideal[1 * 2 + a] = (b == 0 ? amp : -amp);
    ProtocolOutcome outcome{"cnot_two_way", {a, b}, psi, {bob_decoded, alice_decoded}, 0.0,
                            false, std::nullopt};
    outcome.fidelity_to_ideal = state_fidelity(psi, StateVector(ideal, layout));
    outcome.pass = outcome.fidelity_to_ideal >= kProtocolFidelityFloor;
    return outcome;
}

ProtocolOutcome swap_dense_coding(int a1, int a2) {
    require_bit(a1, "a1");
    require_bit(a2, "a2");
    std::vector<Subsystem> layout{
        Subsystem{"A", 2, Side::alice}, Subsystem{"B''", 2, Side::bob},
        Subsystem{"B", 2, Side::bob}, Subsystem{"B'", 2, Side::bob}};
    StateVector pair1(phi_vector(2), {layout[0], layout[1]});
    StateVector pair2(phi_vector(2), {layout[2], layout[3]});
    StateVector psi = tensor_product(pair1, pair2);
    psi = apply_to_labels(clock_power(2, a2), {"A"}, psi);
    psi = apply_to_labels(shift_power(2, a1), {"A"}, psi);
    psi = apply_to_labels(swap_gate(2).matrix, {"A", "B"}, psi);

    // The dense-coded Bell state sits on (B'', B): message (a1, a2) selects
    // (X^a1 Z^a2 x I)|Phi>, i.e. |Phi_{a1, a2}> up to phase.
    int decoded = -1;
    ProjectionResult fresh{StateVector(Vector::Ones(1), {Subsystem{"R", 1, Side::alice}}), 0.0};
    DensityMatrix rho = partial_trace(density_from_state(psi), {"B''", "B"});
    for (int m1 = 0; m1 < 2 && decoded < 0; ++m1) {
        for (int m2 = 0; m2 < 2; ++m2) {
            Vector bell = bell_ket(2, m1, m2);
            StateVector candidate(bell, rho.layout());
            if (fidelity(candidate, rho) >= 1.0 - 1e-10) {
                decoded = m1 * 2 + m2;
                fresh = project_pair(psi, "B''", "B", bell);
                break;
            }
        }
    }
    if (decoded < 0) {
        throw InternalError("swap_dense_coding: Bell measurement is not deterministic");
    }

    // The fresh pair lives on (A, B').
    StateVector ideal_pair(phi_vector(2),
                           {Subsystem{"A", 2, Side::alice}, Subsystem{"B'", 2, Side::bob}});
    double fresh_fidelity = state_fidelity(fresh.state, ideal_pair);

    ProtocolOutcome outcome{"swap_dense_coding", {a1, a2}, psi,
                            {decoded / 2, decoded % 2}, fresh_fidelity, false, std::nullopt};
    outcome.pass = outcome.fidelity_to_ideal >= kProtocolFidelityFloor;
    return outcome;
}

ProtocolOutcome j_exchange(int a, int b) {
    require_bit(a, "a");
    require_bit(b, "b");
    std::vector<Subsystem> layout{Subsystem{"A", 2, Side::alice}, Subsystem{"B", 2, Side::bob}};
    StateVector psi(phi_vector(2), layout);
    psi = apply_to_labels(clock_power(2, a), {"A"}, psi);
    psi = apply_to_labels(clock_power(2, b), {"B"}, psi);
    psi = apply_to_labels(j_gate().matrix, {"A", "B"}, psi);

    int x_bob = deterministic_outcome(psi, "B", {qubit_ket(0), qubit_ket(1)});
    int x_alice = deterministic_outcome(psi, "A", {qubit_ket(0), qubit_ket(1)});
    int a_decoded = x_bob ^ b;    // Bob knows b
    int b_decoded = x_alice ^ a;  // Alice knows a

    int x = a ^ b;
    Vector ideal = Vector::Zero(4);
    ideal[x * 2 + x] = 1.0;
    ProtocolOutcome outcome{"j_exchange", {a, b}, psi, {a_decoded, b_decoded}, 0.0, false,
                            std::nullopt};
    outcome.fidelity_to_ideal = state_fidelity(psi, StateVector(ideal, layout));
    outcome.pass = outcome.fidelity_to_ideal >= kProtocolFidelityFloor;
    return outcome;
}

ProtocolOutcome cp_backward(int b, int d) {
    require_bit(b, "b");
    BipartiteGate gate = cp(d);
    std::vector<Subsystem> layout{Subsystem{"A", d, Side::alice}, Subsystem{"B", d, Side::bob}};
    StateVector psi = basis_state(layout, {0, b});
    psi = apply_to_labels(gate.matrix, {"A", "B"}, psi);

    // b = 0 leaves Alice with |d-1>, b = 1 with |0>.
    int slot = deterministic_outcome(psi, "A", {dit_ket(d, d - 1), dit_ket(d, 0)});
    int decoded = slot;  // candidate order encodes the message

    std::vector<int> ideal_digits = b == 0 ? std::vector<int>{d - 1, d - 1}
                                           : std::vector<int>{0, 0};
    ProtocolOutcome outcome{"cp_backward", {b}, psi, {decoded}, 0.0, false, std::nullopt};
    outcome.fidelity_to_ideal = state_fidelity(psi, basis_state(layout, ideal_digits));
    outcome.pass = outcome.fidelity_to_ideal >= kProtocolFidelityFloor;
    return outcome;
}

ProtocolOutcome ae_forward(int x, int d) {
    BipartiteGate gate = ae(d);
    if (x < 0 || x >= d) {
        throw std::invalid_argument("message x must lie in 0..d-1");
    }
    std::vector<Subsystem> layout{Subsystem{"A", d, Side::alice}, Subsystem{"B", d, Side::bob}};
    StateVector psi = basis_state(layout, {x, 0});
    psi = apply_to_labels(gate.matrix, {"A", "B"}, psi);

    std::vector<Vector> candidates;
    candidates.reserve(d);
    for (int y = 0; y < d; ++y) {
        candidates.push_back(dit_ket(d, y));
    }
    int decoded = deterministic_outcome(psi, "B", candidates);

    ProtocolOutcome outcome{"ae_forward", {x}, psi, {decoded}, 0.0, false, std::nullopt};
    outcome.fidelity_to_ideal = state_fidelity(psi, basis_state(layout, {x, x}));
    outcome.pass = outcome.fidelity_to_ideal >= kProtocolFidelityFloor;
    return outcome;
}

ProtocolOutcome teleport_simulate(const BipartiteGate &gate, const StateVector &psi) {
    const auto &layout = psi.layout();
    int d = gate.dim_a;
    if (layout[find_label(layout, "A")].dim != d ||
        layout[find_label(layout, "B")].dim != gate.dim_b) {
        throw std::invalid_argument("teleport_simulate: state labels A/B do not match the gate");
    }

    StateVector ideal = apply_to_labels(gate.matrix, {"A", "B"}, psi);

    StateVector forward_pair(phi_vector(d), {Subsystem{"Ra", d, Side::alice},
                                             Subsystem{"Rb", d, Side::bob}});
    StateVector backward_pair(phi_vector(d), {Subsystem{"Sa", d, Side::alice},
                                              Subsystem{"Sb", d, Side::bob}});
    StateVector joint = tensor_product(tensor_product(psi, forward_pair), backward_pair);

    // Final labels: the original layout with Sa carrying the round-tripped
    // Alice register; reordering into the original slot order makes the
    // amplitudes directly comparable with the ideal.
    std::vector<std::string> final_order;
    for (const auto &sub : layout) {
        final_order.push_back(sub.label == "A" ? "Sa" : sub.label);
    }

    const double branch_prob = 1.0 / (static_cast<double>(d) * d);
    double min_fidelity = 1.0;
    StateVector final_state = ideal;
    for (int p1 = 0; p1 < d; ++p1) {
        for (int q1 = 0; q1 < d; ++q1) {
            ProjectionResult first = project_pair(joint, "A", "Ra", bell_ket(d, p1, q1));
            if (std::abs(first.probability - branch_prob) > 1e-10) {
                throw InternalError("teleport_simulate: forward branch probability deviates");
            }
            // <Phi_pq| leaves X^p Z^{-q} psi on Rb; undo, then run the gate
            // locally on Bob's side.
            StateVector corrected =
                apply_to_labels(clock_power(d, q1) * shift_power(d, d - p1), {"Rb"}, first.state);
            StateVector evolved = apply_to_labels(gate.matrix, {"Rb", "B"}, corrected);
            for (int p2 = 0; p2 < d; ++p2) {
                for (int q2 = 0; q2 < d; ++q2) {
                    ProjectionResult second =
                        project_pair(evolved, "Rb", "Sb", bell_ket(d, p2, q2));
                    if (std::abs(second.probability - branch_prob) > 1e-10) {
                        throw InternalError(
                            "teleport_simulate: backward branch probability deviates");
                    }
                    StateVector restored = apply_to_labels(
                        clock_power(d, q2) * shift_power(d, d - p2), {"Sa"}, second.state);
                    StateVector aligned = reorder(restored, final_order);
                    StateVector branch_final(aligned.amplitudes(), layout);
                    double f = state_fidelity(branch_final, ideal);
                    if (f <= min_fidelity) {
                        min_fidelity = f;
                        final_state = branch_final;
                    }
                }
            }
        }
    }

    ProtocolOutcome outcome{"teleport_simulate", {}, final_state, {}, min_fidelity, false,
                            ResourceLedger{2, d, 2.0 * std::log2(static_cast<double>(d)),
                                           2.0 * std::log2(static_cast<double>(d))}};
    outcome.pass = outcome.fidelity_to_ideal >= kProtocolFidelityFloor;
    return outcome;
}

}  // namespace gatecap
