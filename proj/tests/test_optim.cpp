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

#include <cmath>

#include "doctest.h"
#include "gatecap/optim.hpp"
#include "test_util.hpp"

using namespace gatecap;

namespace {

// Concave quadratic -(x - c)' A (x - c) with SPD A; unique maximum at c.
ObjectiveFn shifted_quadratic(const Eigen::MatrixXd &a, const Eigen::VectorXd &c) {
    return [a, c](const Eigen::VectorXd &x, Eigen::VectorXd *grad) {
        Eigen::VectorXd d = x - c;
        if (grad != nullptr) {
            *grad = -2.0 * (a * d);
        }
        return -d.dot(a * d);
    };
}

}  // namespace

TEST_SUITE("optim") {

TEST_CASE("maximize finds the optimum of a concave quadratic") {
    Eigen::MatrixXd a(3, 3);
    a << 4.0, 1.0, 0.0, 1.0, 3.0, 0.5, 0.0, 0.5, 2.0;
    Eigen::VectorXd c(3);
    c << 1.0, -2.0, 0.5;
    OptimOptions options;
    OptimResult result = maximize(shifted_quadratic(a, c), Eigen::VectorXd::Zero(3), options);
    CHECK(result.converged);
    CHECK_NEAR((result.x - c).norm(), 0.0, 1e-6);
    CHECK_NEAR(result.value, 0.0, 1e-10);
    CHECK(result.iterations > 0);
}

TEST_CASE("maximize respects the gradient tolerance") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd c(2);
    c << 3.0, -1.0;
    OptimOptions options;
    options.gradient_tolerance = 1e-10;
    ObjectiveFn f = shifted_quadratic(a, c);
    OptimResult result = maximize(f, Eigen::VectorXd::Zero(2), options);
    REQUIRE(result.converged);
    Eigen::VectorXd grad;
    f(result.x, &grad);
    CHECK(grad.norm() <= 1e-9);
}

TEST_CASE("maximize reports non-convergence under an iteration cap") {
    // A slowly-curving objective cannot meet a tiny tolerance in one step.
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 0.0, 0.0, 100.0;
    Eigen::VectorXd c(2);
    c << 5.0, 5.0;
    OptimOptions options;
    options.max_iterations = 1;
    options.gradient_tolerance = 1e-14;
    OptimResult result = maximize(shifted_quadratic(a, c), Eigen::VectorXd::Zero(2), options);
    CHECK_FALSE(result.converged);
}

TEST_CASE("maximize handles a flat objective") {
    ObjectiveFn flat = [](const Eigen::VectorXd &x, Eigen::VectorXd *grad) {
        if (grad != nullptr) {
            grad->setZero(x.size());
        }
        return 0.0;
    };
    OptimOptions options;
    OptimResult result = maximize(flat, Eigen::VectorXd::Ones(4), options);
    CHECK(result.converged);
    CHECK(result.value == 0.0);
}

TEST_CASE("maximize climbs a double-well ridge") {
    ObjectiveFn f = [](const Eigen::VectorXd &x, Eigen::VectorXd *grad) {
        double t = x[0] * x[0] - 1.0;
        if (grad != nullptr) {
            grad->resize(1);
            (*grad)[0] = -4.0 * t * x[0];
        }
        return -t * t;
    };
    Eigen::VectorXd x0(1);
    x0 << 0.1;
    OptimResult result = maximize(f, x0, OptimOptions{});
    CHECK(result.converged);
    CHECK_NEAR(std::abs(result.x[0]), 1.0, 1e-5);
    CHECK_NEAR(result.value, 0.0, 1e-9);
}

TEST_CASE("maximize is deterministic") {
    Eigen::MatrixXd a(2, 2);
    a << 2.0, 0.3, 0.3, 1.0;
    Eigen::VectorXd c(2);
    c << 0.7, -0.4;
    Eigen::VectorXd x0(2);
    x0 << 5.0, 5.0;
    OptimResult r1 = maximize(shifted_quadratic(a, c), x0, OptimOptions{});
    OptimResult r2 = maximize(shifted_quadratic(a, c), x0, OptimOptions{});
    CHECK(r1.value == r2.value);
    CHECK((r1.x - r2.x).norm() == 0.0);
    CHECK(r1.iterations == r2.iterations);
}

TEST_CASE("finite difference gradient matches an analytic gradient") {
    ObjectiveFn f = [](const Eigen::VectorXd &x, Eigen::VectorXd *grad) {
        double value = std::sin(x[0]) + x[0] * x[0] * x[1] - 0.5 * x[1] * x[1];
        if (grad != nullptr) {
            grad->resize(2);
            (*grad)[0] = std::cos(x[0]) + 2.0 * x[0] * x[1];
            (*grad)[1] = x[0] * x[0] - x[1];
        }
        return value;
    };
    Eigen::VectorXd x(2);
    x << 0.8, -1.3;
    Eigen::VectorXd analytic;
    f(x, &analytic);
    Eigen::VectorXd numeric = finite_difference_gradient(f, x);
    CHECK_NEAR((analytic - numeric).norm(), 0.0, 1e-6);
}

}  // TEST_SUITE
