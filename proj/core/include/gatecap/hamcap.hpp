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

#ifndef GATECAP_HAMCAP_HPP
#define GATECAP_HAMCAP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gatecap/entcap.hpp"
#include "gatecap/holevo.hpp"
#include "gatecap/qalg.hpp"

namespace gatecap {

enum class CapacityKind { entanglement, holevo };

struct HamCapConfig {
    // Ancillas default to none: product Hamiltonians already attain their
    // rate on bare inputs. Pass explicit dims to enable them.
    int ancilla_a = 0;
    int ancilla_b = 0;
    int ensemble_size = -1;  // holevo kind only
    int restarts = 16;
    int max_iterations = 2000;
    double gradient_tolerance = 1e-8;
    std::uint64_t seed = 0;
    int threads = 0;
};

struct HamCapSample {
    double s = 0.0;
    double rate = 0.0;  // capacity(e^{-iHs}) / s
    bool converged = false;
};

struct HamCapResult {
    // Extrapolated s -> 0 rate, ebits (or cbits) per unit time.
    double rate = 0.0;
    std::vector<HamCapSample> samples;
    std::string extrapolation_method;
    // Max deviation of the samples from the linear fit in s.
    double residual = 0.0;
};

// Default grid: (0.2, 0.1, 0.05) radians of the eigenvalue spread of H.
std::vector<double> default_s_grid(const Hamiltonian &h);

// For each s (descending), exponentiates, runs the kind's optimizer
// (warm-starting from the previous level's optimum), divides by s, then
// Richardson-extrapolates the finest pair to s -> 0.
HamCapResult hamiltonian_capacity(const Hamiltonian &h, CapacityKind kind,
                                  std::vector<double> s_grid, const HamCapConfig &cfg);

}  // namespace gatecap

#endif
