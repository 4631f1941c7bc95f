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

#ifndef GATECAP_HOLEVO_HPP
#define GATECAP_HOLEVO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gatecap/gates.hpp"
#include "gatecap/qalg.hpp"

namespace gatecap {

// Probability-weighted pure-state ensemble on labels A, A', B, B' with a
// shared layout. Mixed members are out of scope; callers purify themselves.
struct Ensemble {
    std::vector<double> probs;
    std::vector<StateVector> states;
};

struct HolevoConfig {
    // -1 means default: dA * nA * dB * nB ensemble members.
    int ensemble_size = -1;
    int ancilla_a = -1;  // as in EntCapConfig
    int ancilla_b = -1;
    int restarts = 16;
    int max_iterations = 2000;
    double gradient_tolerance = 1e-8;
    std::uint64_t seed = 0;
    int threads = 0;
    std::vector<Eigen::VectorXd> warm_starts;
};

struct HolevoResult {
    // Best found chi(out) - chi(in), in cbits: a certified lower bound on
    // C^E_forward (the one-shot assisted capacity).
    double value = 0.0;
    Ensemble optimal_ensemble;
    double chi_in = 0.0;
    double chi_out = 0.0;
    std::vector<double> per_restart_values;
    bool converged = false;
    std::uint64_t seed = 0;
};

// S(sum p_i eta_i) - sum p_i S(eta_i).
double holevo_chi(const std::vector<std::pair<double, DensityMatrix>> &ensemble);

// chi of the Bob-side reductions (trace over A, A') after applying U, minus
// chi of the Bob-side reductions before. Forward direction is fixed as
// Alice -> Bob; backward is obtained by role-swapping the gate.
double delta_chi_fixed_ensemble(const BipartiteGate &gate, const Ensemble &ensemble);

// Multi-restart maximization over ensembles (probabilities via a normalized
// exponential map, members via normalized complex vectors).
HolevoResult optimize_delta_chi(const BipartiteGate &gate, const HolevoConfig &cfg);

int default_ensemble_size(const BipartiteGate &gate, int ancilla_a, int ancilla_b);

// Parameter-vector length for a given ensemble size and state dimension
// (m logits followed by m blocks of 2*dim state coordinates); exposed for
// warm-start construction.
int holevo_parameter_count(int ensemble_size, int state_dim);

// Embeds an optimal parameter vector for ensemble size m into size m+k by
// padding with near-zero-probability Haar members (warm-start helper).
Eigen::VectorXd pad_ensemble_parameters(const Eigen::VectorXd &x, int ensemble_size,
                                        int state_dim, int new_ensemble_size, Rng &rng);

}  // namespace gatecap

#endif
