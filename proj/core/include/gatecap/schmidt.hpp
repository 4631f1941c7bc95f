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

#ifndef GATECAP_SCHMIDT_HPP
#define GATECAP_SCHMIDT_HPP

#include <utility>
#include <vector>

#include "gatecap/gates.hpp"
#include "gatecap/qalg.hpp"

namespace gatecap {

inline constexpr double kDefaultRankCutoff = 1e-10;

struct StateSchmidt {
    Eigen::VectorXd coefficients;  // descending, sum of squares = 1
    Matrix alice_basis;            // columns are the Alice Schmidt vectors
    Matrix bob_basis;
};

// U = sum_i coefficients[i] alice_factors[i] (x) bob_factors[i], with
// Hilbert-Schmidt orthonormal factors Tr(V_i' V_j) = delta_ij and
// sum coefficients^2 = dA * dB. Factors are gauge-dependent at degenerate
// coefficients; only the coefficients and the reconstruction are
// contract-bearing.
struct OperatorSchmidt {
    Eigen::VectorXd coefficients;  // descending
    std::vector<Matrix> alice_factors;
    std::vector<Matrix> bob_factors;
    int dim_a = 0;
    int dim_b = 0;
};

StateSchmidt state_schmidt(const StateVector &psi);

OperatorSchmidt operator_schmidt(const BipartiteGate &gate);

// Count of coefficients above rank_cutoff relative to the largest.
int schmidt_number(const Eigen::VectorXd &coefficients, double rank_cutoff = kDefaultRankCutoff);
int schmidt_number(const OperatorSchmidt &dec, double rank_cutoff = kDefaultRankCutoff);
int schmidt_number(const StateSchmidt &dec, double rank_cutoff = kDefaultRankCutoff);

// (lower, upper) bounds on the entanglement capacity:
//   lower = -sum mu_i^2 log2 mu_i^2 with mu_i = lambda_i / sqrt(dA dB),
//           the output entropy on the double-EPR input;
//   upper = log2 Sch(U).
std::pair<double, double> schmidt_entropy_bound(const BipartiteGate &gate);

}  // namespace gatecap

#endif
