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

#include "gatecap/entcap.hpp"

#include <cmath>

#include "gatecap/schmidt.hpp"
#include "objective_util.hpp"

namespace gatecap {

namespace {

using internal::RestartOutcome;

void validate_config(int restarts, int max_iterations, double gradient_tolerance) {
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be >= 1");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (gradient_tolerance <= 0.0) {
        throw std::invalid_argument("gradient_tolerance must be > 0");
    }
}

// E(W psi) - E(psi) over normalized psi = z/||z||, with the analytic
// Wirtinger gradient dS/dpsi* = vec(L M) routed through W and the
// normalization projection.
class EntCapObjective {
  public:
    EntCapObjective(Matrix w, int cut_a, int cut_b)
        : w_(std::move(w)), cut_a_(cut_a), cut_b_(cut_b) {}

    double operator()(const Eigen::VectorXd &x, Eigen::VectorXd *grad) const {
        const int dim = cut_a_ * cut_b_;
        Vector z = internal::complex_from_params(x);
        double norm = z.norm();
        if (!(norm > 1e-100)) {
            throw InternalError("entcap objective: parameter vector collapsed to zero");
        }
        Vector psi = z / norm;
        Vector phi = w_ * psi;

        Eigen::Map<const RowMatrix> m_in(psi.data(), cut_a_, cut_b_);
        Eigen::Map<const RowMatrix> m_out(phi.data(), cut_a_, cut_b_);
        Matrix rho_in = m_in * m_in.adjoint();
        Matrix rho_out = m_out * m_out.adjoint();
        internal::SpectralEntropy in = internal::spectral_entropy(rho_in);
        internal::SpectralEntropy out = internal::spectral_entropy(rho_out);
        double value = out.entropy - in.entropy;

        if (grad != nullptr) {
            RowMatrix g_in_mat = in.l_matrix * m_in;
            RowMatrix g_out_mat = out.l_matrix * m_out;
            Eigen::Map<const Vector> g_in(g_in_mat.data(), dim);
            Eigen::Map<const Vector> g_out(g_out_mat.data(), dim);
            Vector g_psi = w_.adjoint() * g_out - g_in;
            Vector g_z = internal::project_normalization(psi, g_psi, norm);
            grad->resize(x.size());
            internal::params_from_wirtinger(g_z, grad, 0);
        }
        return value;
    }

  private:
    Matrix w_;
    int cut_a_;
    int cut_b_;
};

Eigen::VectorXd double_epr_start(const std::vector<Subsystem> &layout) {
    // |Phi_kA>_{AA'} |Phi_kB>_{BB'} truncated to k = min(dim, ancilla).
    int da = layout[0].dim, na = layout[1].dim, db = layout[2].dim, nb = layout[3].dim;
    int ka = std::min(da, na);
    int kb = std::min(db, nb);
    int dim = da * na * db * nb;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * dim);
    double amp = 1.0 / std::sqrt(static_cast<double>(ka) * kb);
    for (int i = 0; i < ka; ++i) {
        for (int j = 0; j < kb; ++j) {
            x[((i * na + i) * db + j) * nb + j] = amp;
        }
    }
    return x;
}

struct OptimizeOutput {
    std::vector<RestartOutcome> outcomes;
    int best = 0;
    std::vector<Subsystem> layout;
};

OptimizeOutput run_entcap(const BipartiteGate &gate, const EntCapConfig &cfg) {
    validate_config(cfg.restarts, cfg.max_iterations, cfg.gradient_tolerance);
    int na = resolved_ancilla(cfg.ancilla_a, gate.dim_a);
    int nb = resolved_ancilla(cfg.ancilla_b, gate.dim_b);
    auto layout = entcap_layout(gate, na, nb);
    int dim = layout_dim(layout);

    Matrix w = embed_on_labels(gate.matrix, {"A", "B"}, layout);
    EntCapObjective objective(std::move(w), gate.dim_a * na, gate.dim_b * nb);

    std::vector<Eigen::VectorXd> starts;
    starts.reserve(cfg.restarts + cfg.warm_starts.size());
    starts.push_back(double_epr_start(layout));
    for (int i = 1; i < cfg.restarts; ++i) {
        Rng rng(derive_seed(cfg.seed, i));
        Vector z = rng.haar_state(dim);
        Eigen::VectorXd x(2 * dim);
        x.head(dim) = z.real();
        x.tail(dim) = z.imag();
        starts.push_back(std::move(x));
    }
    for (const auto &warm : cfg.warm_starts) {
        if (warm.size() != 2 * dim) {
            throw std::invalid_argument("warm start has wrong parameter count");
        }
        starts.push_back(warm);
    }

    OptimOptions options;
    options.max_iterations = cfg.max_iterations;
    options.gradient_tolerance = cfg.gradient_tolerance;

    OptimizeOutput out;
    out.outcomes = internal::run_restarts(objective, starts, options, cfg.threads);
    out.best = internal::best_outcome(out.outcomes);
    out.layout = std::move(layout);
    return out;
}

}  // namespace

int resolved_ancilla(int requested, int gate_dim) {
    if (requested == -1) {
        return gate_dim;
    }
    if (requested < 0) {
        throw std::invalid_argument("ancilla dimension must be >= 0 (or -1 for the default)");
    }
    // 0 = no ancilla; a one-dimensional subsystem is the same Hilbert space.
    return std::max(requested, 1);
}

std::vector<Subsystem> entcap_layout(const BipartiteGate &gate, int ancilla_a, int ancilla_b) {
    return {Subsystem{"A", gate.dim_a, Side::alice}, Subsystem{"A'", ancilla_a, Side::alice},
            Subsystem{"B", gate.dim_b, Side::bob}, Subsystem{"B'", ancilla_b, Side::bob}};
}

double delta_e_fixed_input(const BipartiteGate &gate, const StateVector &psi) {
    const auto &layout = psi.layout();
    int pos_a = find_label(layout, "A");
    int pos_b = find_label(layout, "B");
    if (layout[pos_a].dim != gate.dim_a || layout[pos_b].dim != gate.dim_b) {
        throw std::invalid_argument(
            "layout mismatch: labels A/B have dims (" + std::to_string(layout[pos_a].dim) + ", " +
            std::to_string(layout[pos_b].dim) + "), gate needs (" + std::to_string(gate.dim_a) +
            ", " + std::to_string(gate.dim_b) + ")");
    }
    StateVector out = apply_to_labels(gate.matrix, {"A", "B"}, psi);
    return entanglement_entropy(out) - entanglement_entropy(psi);
}

EntCapResult optimize_entcap(const BipartiteGate &gate, const EntCapConfig &cfg) {
    OptimizeOutput run = run_entcap(gate, cfg);
    const RestartOutcome &best = run.outcomes[run.best];

    Vector z = internal::complex_from_params(best.x);
    StateVector input(z / z.norm(), run.layout);
    double e_in = entanglement_entropy(input);
    double e_out = entanglement_entropy(apply_to_labels(gate.matrix, {"A", "B"}, input));

    EntCapResult result{e_out - e_in, std::move(input), e_in, e_out, {}, best.converged, cfg.seed};
    result.per_restart_values.reserve(run.outcomes.size());
    for (const auto &o : run.outcomes) {
        result.per_restart_values.push_back(o.value);
    }

    double upper = schmidt_entropy_bound(gate).second;
    if (result.value > upper + 1e-6) {
        throw InternalError("entcap: optimized value " + std::to_string(result.value) +
                            " exceeds log2 Sch(U) = " + std::to_string(upper));
    }
    if (result.value < -1e-9) {
        throw InternalError("entcap: optimized value " + std::to_string(result.value) +
                            " is negative");
    }
    return result;
}

EntCapResult destroying_capacity(const BipartiteGate &gate, const EntCapConfig &cfg) {
    return optimize_entcap(adjoint(gate), cfg);
}

std::vector<std::pair<int, double>> ancilla_sweep(const BipartiteGate &gate,
                                                  const std::vector<int> &dims_list,
                                                  const EntCapConfig &cfg) {
    if (dims_list.empty()) {
        throw std::invalid_argument("ancilla_sweep: dims list is empty");
    }
    for (size_t i = 1; i < dims_list.size(); ++i) {
        if (dims_list[i] <= dims_list[i - 1]) {
            throw std::invalid_argument("ancilla_sweep: dims list must be ascending");
        }
    }
    if (dims_list.front() < 0) {
        throw std::invalid_argument("ancilla_sweep: dims must be >= 0");
    }

    std::vector<std::pair<int, double>> out;
    StateVector previous_input(Vector::Ones(1), {Subsystem{"A", 1, Side::alice}});
    bool have_previous = false;
    for (int n : dims_list) {
        EntCapConfig level_cfg = cfg;
        level_cfg.ancilla_a = n;
        level_cfg.ancilla_b = n;
        level_cfg.warm_starts.clear();
        if (have_previous) {
            // Embed the previous optimum in the larger ancilla space.
            int na = std::max(n, 1);
            auto layout = entcap_layout(gate, na, na);
            Vector amps = Vector::Zero(layout_dim(layout));
            const auto &prev_layout = previous_input.layout();
            int pna = prev_layout[1].dim;
            int pnb = prev_layout[3].dim;
            for (int a = 0; a < gate.dim_a; ++a) {
                for (int ap = 0; ap < pna; ++ap) {
                    for (int b = 0; b < gate.dim_b; ++b) {
                        for (int bp = 0; bp < pnb; ++bp) {
                            amps[((a * na + ap) * gate.dim_b + b) * na + bp] =
                                previous_input.amplitudes()[((a * pna + ap) * gate.dim_b + b) * pnb +
                                                            bp];
                        }
                    }
                }
            }
            Eigen::VectorXd warm(2 * amps.size());
            warm.head(amps.size()) = amps.real();
            warm.tail(amps.size()) = amps.imag();
            level_cfg.warm_starts.push_back(std::move(warm));
        }
        EntCapResult result = optimize_entcap(gate, level_cfg);
        out.emplace_back(n, result.value);
        previous_input = result.optimal_input;
        have_previous = true;
    }
    return out;
}

namespace internal {

ObjectiveFn entcap_objective_fn(const BipartiteGate &gate, int ancilla_a, int ancilla_b) {
    int na = resolved_ancilla(ancilla_a, gate.dim_a);
    int nb = resolved_ancilla(ancilla_b, gate.dim_b);
    auto layout = entcap_layout(gate, na, nb);
    Matrix w = embed_on_labels(gate.matrix, {"A", "B"}, layout);
    return EntCapObjective(std::move(w), gate.dim_a * na, gate.dim_b * nb);
}

}  // namespace internal

}  // namespace gatecap
