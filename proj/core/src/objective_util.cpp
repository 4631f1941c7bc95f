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

#include "objective_util.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace gatecap::internal {

SpectralEntropy spectral_entropy(const Matrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
    const Eigen::VectorXd &vals = solver.eigenvalues();
    SpectralEntropy out;
    Eigen::VectorXd l_diag(vals.size());
    const double inv_ln2 = 1.0 / std::numbers::ln2;
    for (int i = 0; i < vals.size(); ++i) {
        double lambda = std::max(vals[i], 0.0);
        if (lambda > kEntropyCutoff) {
            out.entropy -= lambda * std::log2(lambda);
        }
        l_diag[i] = -(std::log2(std::max(lambda, kGradientEigenvalueFloor)) + inv_ln2);
    }
    out.l_matrix = solver.eigenvectors() * l_diag.asDiagonal().toDenseMatrix().cast<Complex>() *
                   solver.eigenvectors().adjoint();
    return out;
}

Vector complex_from_params(const Eigen::VectorXd &x) {
    int n = static_cast<int>(x.size()) / 2;
    Vector z(n);
    for (int i = 0; i < n; ++i) {
        z[i] = Complex(x[i], x[n + i]);
    }
    return z;
}

void params_from_wirtinger(const Vector &g, Eigen::VectorXd *out, int offset) {
    int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i) {
        (*out)[offset + i] = 2.0 * g[i].real();
        (*out)[offset + n + i] = 2.0 * g[i].imag();
    }
}

Vector project_normalization(const Vector &psi, const Vector &g_psi, double norm) {
    Complex overlap = psi.adjoint() * g_psi;
    return (g_psi - overlap.real() * psi) / norm;
}

std::vector<RestartOutcome> run_restarts(const ObjectiveFn &objective,
                                         const std::vector<Eigen::VectorXd> &starts,
                                         const OptimOptions &options, int threads) {
    int n = static_cast<int>(starts.size());
    std::vector<RestartOutcome> outcomes(n);
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n));

    auto run_one = [&](int i) {
        OptimResult r = maximize(objective, starts[i], options);
        outcomes[i] = RestartOutcome{r.value, std::move(r.x), r.converged};
    };

    if (workers == 1) {
        for (int i = 0; i < n; ++i) {
            run_one(i);
        }
        return outcomes;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                run_one(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    return outcomes;
}

int best_outcome(const std::vector<RestartOutcome> &outcomes) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(outcomes.size()); ++i) {
        if (outcomes[i].value > outcomes[best].value) {
            best = i;
        }
    }
    return best;
}

}  // namespace gatecap::internal
