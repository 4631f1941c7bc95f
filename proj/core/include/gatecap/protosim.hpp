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

#ifndef GATECAP_PROTOSIM_HPP
#define GATECAP_PROTOSIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "gatecap/gates.hpp"
#include "gatecap/qalg.hpp"

namespace gatecap {

inline constexpr double kProtocolFidelityFloor = 1.0 - 1e-10;

struct ResourceLedger {
    int epr_pairs = 0;
    int epr_dim = 0;
    double cbits_forward = 0.0;
    double cbits_backward = 0.0;
};

// Measurements are simulated by projecting and checking determinism (outcome
// probability 1 within 1e-10), never by sampling; global phases are ignored
// through fidelity-based comparison.
struct ProtocolOutcome {
    std::string protocol;
    std::vector<int> inputs;
    StateVector final_state;
    std::vector<int> decoded;
    double fidelity_to_ideal = 0.0;
    bool pass = false;
    std::optional<ResourceLedger> resources;
};

// Two-way communication through one CNOT on a shared EPR pair: Alice encodes
// a with sigma_x, Bob encodes b with sigma_z; after the CNOT Bob's register
// decodes a in the computational basis, Alice's decodes b in the X basis.
// decoded = {a as decoded by Bob, b as decoded by Alice}.
ProtocolOutcome cnot_two_way(int a, int b);

// Superdense coding through one SWAP, consuming an EPR pair on (A, B'') while
// creating a fresh one on (A, B'). decoded = {a1, a2} from Bob's Bell
// measurement on (B'', B).
ProtocolOutcome swap_dense_coding(int a1, int a2);

// Mutual bit exchange through one J gate: sigma_z^a and sigma_z^b on an EPR
// pair, then J, leaving |x>|x> with x = a xor b.
// decoded = {a as learned by Bob, b as learned by Alice}.
ProtocolOutcome j_exchange(int a, int b);

// One backward bit through CP(d): input |0>_A |b>_B leaves Alice with
// |d-1> (b = 0) or |0> (b = 1). decoded = {b}.
ProtocolOutcome cp_backward(int b, int d);

// log2(d) forward cbits through AE(d): input |x>_A |0>_B -> |x>|x>.
// decoded = {x}.
ProtocolOutcome ae_forward(int x, int d);

// Implements U by double teleportation: teleport Alice's register to Bob
// (consuming |Phi_dA>), apply U locally, teleport back. All dA^4 measurement
// branches are enumerated with their corrections and each must reproduce
// U psi exactly; fidelity_to_ideal is the minimum over branches. The resource
// ledger records 2 EPR pairs of dimension dA and 2 log2 dA cbits each way.
ProtocolOutcome teleport_simulate(const BipartiteGate &gate, const StateVector &psi);

}  // namespace gatecap

#endif
