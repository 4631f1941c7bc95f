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

#ifndef GATECAP_OPTIM_HPP
#define GATECAP_OPTIM_HPP

#include <functional>

#include <Eigen/Dense>

namespace gatecap {

// f(x, grad) returns the objective value and, when grad != nullptr, fills the
// gradient (same size as x).
using ObjectiveFn = std::function<double(const Eigen::VectorXd &, Eigen::VectorXd *)>;

struct OptimOptions {
    int max_iterations = 2000;
    double gradient_tolerance = 1e-8;
    // Stop when the relative objective change stays below this.
    double value_tolerance = 1e-13;
    int history = 10;
};

struct OptimResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// L-BFGS ascent (two-loop recursion) with Armijo backtracking. Deterministic:
// identical inputs give identical iterates.
OptimResult maximize(const ObjectiveFn &f, Eigen::VectorXd x0, const OptimOptions &options);

// Central finite-difference gradient, for verifying analytic gradients.
Eigen::VectorXd finite_difference_gradient(const ObjectiveFn &f, const Eigen::VectorXd &x,
                                           double step = 1e-6);

}  // namespace gatecap

#endif
