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

#include "gatecap/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gatecap {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

std::complex<double> Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
}

Eigen::VectorXcd Rng::gaussian_vector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = complex_normal();
    }
    return v;
}

Eigen::VectorXcd Rng::haar_state(int n) {
    Eigen::VectorXcd v = gaussian_vector(n);
    double norm = v.norm();
    while (norm == 0.0) {
        v = gaussian_vector(n);
        norm = v.norm();
    }
    return v / norm;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over a fixed combination; any fixed injective-ish mixing
    // works, it just has to be identical everywhere.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Eigen::MatrixXcd haar_random_unitary(int d, Rng &rng) {
    if (d < 1) {
        throw std::invalid_argument("haar_random_unitary: dimension must be >= 1");
    }
    Eigen::MatrixXcd g(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            g(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        std::complex<double> diag = r(i, i);
        double mag = std::abs(diag);
        std::complex<double> phase = mag > 0.0 ? diag / mag : 1.0;
        q.col(i) *= phase;
    }
    return q;
}

Eigen::MatrixXcd haar_random_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_unitary(d, rng);
}

}  // namespace gatecap
