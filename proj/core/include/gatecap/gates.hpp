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

#ifndef GATECAP_GATES_HPP
#define GATECAP_GATES_HPP

#include <string>
#include <vector>

#include "gatecap/qalg.hpp"

namespace gatecap {

// Unitary on a dA x dB bipartite system, row-major over (Alice index, Bob
// index). dims are always carried explicitly; rectangular dA x dB systems are
// first-class and never inferred as square.
struct BipartiteGate {
    Matrix matrix;
    int dim_a = 0;
    int dim_b = 0;
    std::string name;
    std::vector<double> params;
};

// Validates dimensions and unitarity (||U'U - I||_max <= tolerance).
BipartiteGate make_bipartite_gate(Matrix matrix, int dim_a, int dim_b, std::string name,
                                  std::vector<double> params = {}, double tolerance = 1e-10);

BipartiteGate cnot();
BipartiteGate swap_gate(int d);
BipartiteGate j_gate();
BipartiteGate cp(int d);
BipartiteGate ae(int d);
// exp(-i alpha sigma_z (x) sigma_z).
BipartiteGate phase_gate(double alpha);

BipartiteGate adjoint(const BipartiteGate &gate);
// Exchanges the Alice/Bob roles: the returned gate acts on (dB, dA) with
// conjugated index order. Backward-direction capacities are computed on it.
BipartiteGate role_swapped(const BipartiteGate &gate);

Hamiltonian zz_hamiltonian();
Hamiltonian xx_yy_hamiltonian(double alpha, double beta);
// sigma_z (x) I, a local Hamiltonian with zero capacity.
Hamiltonian z_local_hamiltonian();
Hamiltonian zero_hamiltonian(int dim_a, int dim_b);

BipartiteGate matrix_exponential(const Hamiltonian &h, double s);

// JSON matrix container {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]},
// rows in row-major (Alice-major) basis order. Parse failures, dimension
// mismatches, ragged rows and unitarity violations (> 1e-8) are reported as
// distinct std::invalid_argument messages.
BipartiteGate gate_from_file(const std::string &path);
Hamiltonian hamiltonian_from_file(const std::string &path);

// Serialization of the same container (used by reports for round-tripping).
std::string matrix_to_json(const Matrix &m, int dim_a, int dim_b);

// FNV-1a 64-bit digest of a file's bytes, as "fnv1a64:<hex>".
std::string file_digest(const std::string &path);

}  // namespace gatecap

#endif
