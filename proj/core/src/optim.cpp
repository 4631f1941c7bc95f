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

#include "gatecap/optim.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace gatecap {

namespace {

struct Pair {
    Eigen::VectorXd s;
    Eigen::VectorXd y;
    double rho;
};

// Two-loop recursion for the ascent direction H * g.
Eigen::VectorXd lbfgs_direction(const std::deque<Pair> &history, const Eigen::VectorXd &g) {
    Eigen::VectorXd q = g;
    std::vector<double> alpha(history.size());
    for (int i = static_cast<int>(history.size()) - 1; i >= 0; --i) {
        alpha[i] = history[i].rho * history[i].s.dot(q);
        q -= alpha[i] * history[i].y;
    }
    if (!history.empty()) {
        const Pair &last = history.back();
        double gamma = last.s.dot(last.y) / last.y.squaredNorm();
        q *= gamma;
    }
    for (size_t i = 0; i < history.size(); ++i) {
        double beta = history[i].rho * history[i].y.dot(q);
        q += (alpha[i] - beta) * history[i].s;
    }
    return q;
}

}  // namespace

OptimResult maximize(const ObjectiveFn &f, Eigen::VectorXd x0, const OptimOptions &options) {
    if (options.max_iterations < 1 || options.gradient_tolerance <= 0.0) {
        throw std::invalid_argument("maximize: invalid optimizer options");
    }
    const double c1 = 1e-4;

    Eigen::VectorXd x = std::move(x0);
    Eigen::VectorXd grad(x.size());
    double value = f(x, &grad);

    std::deque<Pair> history;
    OptimResult result;
    int flat_count = 0;

    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        double gnorm = grad.lpNorm<Eigen::Infinity>();
        if (gnorm <= options.gradient_tolerance) {
            result.converged = true;
            break;
        }

        Eigen::VectorXd direction = lbfgs_direction(history, grad);
        double slope = grad.dot(direction);
        if (slope <= 0.0) {
            // Curvature information went stale; fall back to steepest ascent.
            history.clear();
            direction = grad;
            slope = grad.squaredNorm();
        }

        double step = history.empty() ? std::min(1.0, 1.0 / std::max(gnorm, 1e-12)) : 1.0;
        Eigen::VectorXd x_new;
        Eigen::VectorXd grad_new(x.size());
        double value_new = value;
        bool accepted = false;
        for (int trial = 0; trial < 50; ++trial) {
            x_new = x + step * direction;
            value_new = f(x_new, &grad_new);
            if (value_new >= value + c1 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No ascent possible along this direction at any step size: treat
            // as converged-at-noise-floor.
            result.converged = gnorm <= std::max(options.gradient_tolerance, 1e-6);
            break;
        }

        Eigen::VectorXd s = x_new - x;
        Eigen::VectorXd y = grad_new - grad;
        double sy = s.dot(y);
        if (-sy > 1e-10 * s.norm() * y.norm()) {
            // Descent convention: store with the sign that keeps rho positive
            // for the ascent two-loop (y points opposite the gradient change).
            history.push_back(Pair{s, -y, 1.0 / (-sy)});
            if (static_cast<int>(history.size()) > options.history) {
                history.pop_front();
            }
        }

        double change = std::abs(value_new - value);
        x = std::move(x_new);
        grad = std::move(grad_new);
        value = value_new;

        if (change <= options.value_tolerance * std::max(1.0, std::abs(value))) {
            if (++flat_count >= 3) {
                result.converged = true;
                ++iter;
                break;
            }
        } else {
            flat_count = 0;
        }
    }

    result.x = std::move(x);
    result.value = value;
    result.iterations = iter;
    return result;
}

Eigen::VectorXd finite_difference_gradient(const ObjectiveFn &f, const Eigen::VectorXd &x,
                                           double step) {
    Eigen::VectorXd grad(x.size());
    Eigen::VectorXd probe = x;
    for (int i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + step;
        double plus = f(probe, nullptr);
        probe[i] = x[i] - step;
        double minus = f(probe, nullptr);
        probe[i] = x[i];
        grad[i] = (plus - minus) / (2.0 * step);
    }
    return grad;
}

}  // namespace gatecap
