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

#include "gatecap/hamcap.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "gatecap/errors.hpp"

namespace gatecap {

namespace {

void validate_grid(const std::vector<double> &s_grid) {
    if (s_grid.size() < 2) {
        throw std::invalid_argument("s_grid needs at least 2 points");
    }
    for (size_t i = 0; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > 0.0)) {
            throw std::invalid_argument("s_grid values must be positive");
        }
        if (i > 0 && s_grid[i] >= s_grid[i - 1]) {
            throw std::invalid_argument("s_grid must be strictly descending");
        }
    }
}

Eigen::VectorXd entcap_params(const StateVector &psi) {
    int dim = psi.dim();
    Eigen::VectorXd x(2 * dim);
    x.head(dim) = psi.amplitudes().real();
    x.tail(dim) = psi.amplitudes().imag();
    return x;
}

Eigen::VectorXd holevo_params(const Ensemble &e) {
    int m = static_cast<int>(e.states.size());
    int dim = e.states.front().dim();
    Eigen::VectorXd x(holevo_parameter_count(m, dim));
    for (int i = 0; i < m; ++i) {
        x[i] = std::log(e.probs[i] + 1e-300);
        x.segment(m + 2 * dim * i, dim) = e.states[i].amplitudes().real();
        x.segment(m + 2 * dim * i + dim, dim) = e.states[i].amplitudes().imag();
    }
    return x;
}

}  // namespace

std::vector<double> default_s_grid(const Hamiltonian &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries, Eigen::EigenvaluesOnly);
    double spread = solver.eigenvalues().maxCoeff() - solver.eigenvalues().minCoeff();
    double scale = spread > 1e-12 ? 1.0 / spread : 1.0;
    return {0.2 * scale, 0.1 * scale, 0.05 * scale};
}

HamCapResult hamiltonian_capacity(const Hamiltonian &h, CapacityKind kind,
                                  std::vector<double> s_grid, const HamCapConfig &cfg) {
    validate_grid(s_grid);

    HamCapResult result;
    result.samples.reserve(s_grid.size());
    result.extrapolation_method = "richardson-2pt";

    if (kind == CapacityKind::entanglement) {
        EntCapConfig level;
        level.ancilla_a = cfg.ancilla_a;
        level.ancilla_b = cfg.ancilla_b;
        level.restarts = cfg.restarts;
        level.max_iterations = cfg.max_iterations;
        level.gradient_tolerance = cfg.gradient_tolerance;
        level.seed = cfg.seed;
        level.threads = cfg.threads;
        for (double s : s_grid) {
            EntCapResult r = optimize_entcap(matrix_exponential(h, s), level);
            result.samples.push_back({s, r.value / s, r.converged});
            level.warm_starts = {entcap_params(r.optimal_input)};
        }
    } else {
        HolevoConfig level;
        level.ancilla_a = cfg.ancilla_a;
        level.ancilla_b = cfg.ancilla_b;
        level.ensemble_size = cfg.ensemble_size;
        level.restarts = cfg.restarts;
        level.max_iterations = cfg.max_iterations;
        level.gradient_tolerance = cfg.gradient_tolerance;
        level.seed = cfg.seed;
        level.threads = cfg.threads;
        for (double s : s_grid) {
            HolevoResult r = optimize_delta_chi(matrix_exponential(h, s), level);
            result.samples.push_back({s, r.value / s, r.converged});
            level.warm_starts = {holevo_params(r.optimal_ensemble)};
        }
    }

    // Two-point Richardson on the finest pair, assuming a linear error model
    // rate(s) = R + a s.
    const HamCapSample &coarse = result.samples[result.samples.size() - 2];
    const HamCapSample &fine = result.samples.back();
    result.rate = (coarse.s * fine.rate - fine.s * coarse.rate) / (coarse.s - fine.s);

    // Residual: max deviation from the least-squares linear fit in s over all
    // samples (zero for exactly two).
    int n = static_cast<int>(result.samples.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &sample : result.samples) {
        sx += sample.s;
        sy += sample.rate;
        sxx += sample.s * sample.s;
        sxy += sample.s * sample.rate;
    }
    double denom = n * sxx - sx * sx;
    double beta = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    double alpha = (sy - beta * sx) / n;
    for (const auto &sample : result.samples) {
        result.residual = std::max(result.residual,
                                   std::abs(sample.rate - (alpha + beta * sample.s)));
    }

    if (!std::isfinite(result.rate)) {
        throw InternalError("hamiltonian_capacity: extrapolated rate is not finite");
    }
    return result;
}

}  // namespace gatecap
