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

#ifndef GATECAP_SRC_OBJECTIVE_UTIL_HPP
#define GATECAP_SRC_OBJECTIVE_UTIL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "gatecap/gates.hpp"
#include "gatecap/optim.hpp"
#include "gatecap/qalg.hpp"

namespace gatecap::internal {

// Eigenvalues below this are frozen inside entropy gradients (their log term
// treated as bounded) to avoid the log singularity at zero.
inline constexpr double kGradientEigenvalueFloor = 1e-9;

struct SpectralEntropy {
    double entropy = 0.0;  // bits, with the 1e-12 value cutoff
    Matrix l_matrix;       // dS = Tr(d rho . L), eigenvalues floored at 1e-9
};

SpectralEntropy spectral_entropy(const Matrix &rho);

// x = [Re z; Im z] -> z.
Vector complex_from_params(const Eigen::VectorXd &x);
// Appends [2 Re g; 2 Im g] of the Wirtinger gradient g = df/dz*.
void params_from_wirtinger(const Vector &g, Eigen::VectorXd *out, int offset);

// Wirtinger gradient through the normalization map psi = z / ||z||:
// g_z = (g_psi - psi * Re<psi, g_psi>) / ||z||.
Vector project_normalization(const Vector &psi, const Vector &g_psi, double norm);

struct RestartOutcome {
    double value = 0.0;
    Eigen::VectorXd x;
    bool converged = false;
};

// Runs one maximize() per starting point, possibly concurrently; outcomes are
// indexed by start, so the reduction is scheduling-independent.
std::vector<RestartOutcome> run_restarts(const ObjectiveFn &objective,
                                         const std::vector<Eigen::VectorXd> &starts,
                                         const OptimOptions &options, int threads);

// Index of the best outcome (max value, ties to the lower index).
int best_outcome(const std::vector<RestartOutcome> &outcomes);

// The raw optimizer objectives with their analytic gradients, exposed so the
// gradient can be checked against finite differences.
ObjectiveFn entcap_objective_fn(const BipartiteGate &gate, int ancilla_a, int ancilla_b);
ObjectiveFn holevo_objective_fn(const BipartiteGate &gate, int ancilla_a, int ancilla_b,
                                int ensemble_size);

}  // namespace gatecap::internal

#endif
