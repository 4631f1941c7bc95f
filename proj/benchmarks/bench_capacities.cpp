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

#include <benchmark/benchmark.h>

#include "gatecap/entcap.hpp"
#include "gatecap/gates.hpp"
#include "gatecap/holevo.hpp"
#include "gatecap/protosim.hpp"
#include "gatecap/qalg.hpp"
#include "gatecap/rng.hpp"
#include "gatecap/schmidt.hpp"
#include "objective_util.hpp"

namespace {

using namespace gatecap;

Eigen::VectorXd random_params(int n, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = rng.normal();
    }
    return x;
}

void BM_operator_schmidt_2q(benchmark::State &state) {
    BipartiteGate gate = make_bipartite_gate(haar_random_unitary(4, 1), 2, 2, "haar");
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_schmidt(gate));
    }
}
BENCHMARK(BM_operator_schmidt_2q);

void BM_entcap_objective_gradient(benchmark::State &state) {
    ObjectiveFn f = internal::entcap_objective_fn(j_gate(), 2, 2);
    Eigen::VectorXd x = random_params(32, 2);
    Eigen::VectorXd grad(32);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f(x, &grad));
    }
}
BENCHMARK(BM_entcap_objective_gradient);

void BM_holevo_objective_gradient(benchmark::State &state) {
    ObjectiveFn f = internal::holevo_objective_fn(cnot(), 1, 1, 4);
    Eigen::VectorXd x = random_params(holevo_parameter_count(4, 4), 3);
    Eigen::VectorXd grad(x.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(f(x, &grad));
    }
}
BENCHMARK(BM_holevo_objective_gradient);

void BM_optimize_entcap_cnot(benchmark::State &state) {
    EntCapConfig cfg;
    cfg.restarts = 2;
    cfg.max_iterations = 300;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_entcap(cnot(), cfg));
    }
}
BENCHMARK(BM_optimize_entcap_cnot)->Unit(benchmark::kMillisecond);

void BM_teleport_simulate_cnot(benchmark::State &state) {
    std::vector<Subsystem> layout{Subsystem{"A", 2, Side::alice}, Subsystem{"B", 2, Side::bob}};
    StateVector psi = basis_state(layout, {1, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport_simulate(cnot(), psi));
    }
}
BENCHMARK(BM_teleport_simulate_cnot)->Unit(benchmark::kMillisecond);

void BM_matrix_exponential_zz(benchmark::State &state) {
    Hamiltonian h = zz_hamiltonian();
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_exponential(h, 0.05));
    }
}
BENCHMARK(BM_matrix_exponential_zz);

void BM_partial_trace_16(benchmark::State &state) {
    std::vector<Subsystem> layout{
        Subsystem{"A", 2, Side::alice}, Subsystem{"A'", 2, Side::alice},
        Subsystem{"B", 2, Side::bob}, Subsystem{"B'", 2, Side::bob}};
    Rng rng(4);
    DensityMatrix rho = density_from_state(StateVector(rng.haar_state(16), layout));
    std::vector<std::string> keep{"A", "A'"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, keep));
    }
}
BENCHMARK(BM_partial_trace_16);

}  // namespace

BENCHMARK_MAIN();
