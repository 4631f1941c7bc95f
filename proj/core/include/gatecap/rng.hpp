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

#ifndef GATECAP_RNG_HPP
#define GATECAP_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace gatecap {

// Deterministic random source. std::normal_distribution's output sequence is
// implementation-defined, so normals come from a fixed Box-Muller transform
// over the mt19937_64 bit stream; identical seeds give identical streams on
// every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform();

    // Standard normal via Box-Muller; generated in cached pairs.
    double normal();

    std::complex<double> complex_normal();

    Eigen::VectorXcd gaussian_vector(int n);

    // Normalized Haar-random state vector of dimension n.
    Eigen::VectorXcd haar_state(int n);

  private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Stream-independent seed for a sub-task (e.g. one optimizer restart), so
// results do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Haar-random d x d unitary: QR of a complex Ginibre matrix with the R
// diagonal phases absorbed into Q.
Eigen::MatrixXcd haar_random_unitary(int d, Rng &rng);
Eigen::MatrixXcd haar_random_unitary(int d, std::uint64_t seed);

}  // namespace gatecap

#endif
