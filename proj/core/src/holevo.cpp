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

#include "gatecap/holevo.hpp"

#include <algorithm>
#include <cmath>

#include "gatecap/entcap.hpp"
#include "objective_util.hpp"

namespace gatecap {

namespace {

using internal::RestartOutcome;

void validate_probabilities(const std::vector<double> &probs) {
    if (probs.empty()) {
        throw std::invalid_argument("ensemble probabilities are empty");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("ensemble probability " + std::to_string(p) +
                                        " is negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw std::invalid_argument("ensemble probabilities sum to " + std::to_string(sum) +
                                    ", expected 1");
    }
}

Eigen::VectorXd softmax(const Eigen::VectorXd &logits) {
    Eigen::VectorXd p = (logits.array() - logits.maxCoeff()).exp();
    return p / p.sum();
}

// Bob-side reduction rho[b, b'] = sum_a psi[a b] conj(psi[a b']) from the
// Alice x Bob cut matrix.
Matrix bob_reduction(const Matrix &cut) {
    return cut.transpose() * cut.conjugate();
}

std::vector<Subsystem> bob_side_layout(const std::vector<Subsystem> &layout) {
    std::vector<Subsystem> out;
    for (const auto &sub : layout) {
        if (sub.side == Side::bob) {
            out.push_back(sub);
        }
    }
    return out;
}

// chi(out) - chi(in) over an ensemble parameterized as m logits followed by
// m blocks of unnormalized state coordinates. Analytic gradient: for member i,
// dS(rho_mixture)/dpsi_i* - p_i dS(rho_i)/dpsi_i* routes through the matrix
// identity ((I x G) psi <-> M G^T) with G drawn from the entropy L matrices.
class HolevoObjective {
  public:
    HolevoObjective(Matrix w, int cut_a, int cut_b, int ensemble_size)
        : w_(std::move(w)), cut_a_(cut_a), cut_b_(cut_b), m_(ensemble_size) {}

    double operator()(const Eigen::VectorXd &x, Eigen::VectorXd *grad) const {
        const int dim = cut_a_ * cut_b_;
        Eigen::VectorXd p = softmax(x.head(m_));

        std::vector<Vector> psis(m_), phis(m_);
        std::vector<double> norms(m_);
        std::vector<Matrix> rho_in(m_), rho_out(m_);
        Matrix mix_in = Matrix::Zero(cut_b_, cut_b_);
        Matrix mix_out = Matrix::Zero(cut_b_, cut_b_);
        for (int i = 0; i < m_; ++i) {
            Vector z = internal::complex_from_params(x.segment(m_ + 2 * dim * i, 2 * dim));
            norms[i] = z.norm();
            if (!(norms[i] > 1e-100)) {
                throw InternalError("holevo objective: member state collapsed to zero");
            }
            psis[i] = z / norms[i];
            phis[i] = w_ * psis[i];
            Eigen::Map<const RowMatrix> m_in(psis[i].data(), cut_a_, cut_b_);
            Eigen::Map<const RowMatrix> m_out(phis[i].data(), cut_a_, cut_b_);
            rho_in[i] = bob_reduction(m_in);
            rho_out[i] = bob_reduction(m_out);
            mix_in += p[i] * rho_in[i];
            mix_out += p[i] * rho_out[i];
        }

        internal::SpectralEntropy mix_in_s = internal::spectral_entropy(mix_in);
        internal::SpectralEntropy mix_out_s = internal::spectral_entropy(mix_out);
        std::vector<internal::SpectralEntropy> in_s(m_), out_s(m_);
        double chi_in = mix_in_s.entropy;
        double chi_out = mix_out_s.entropy;
        for (int i = 0; i < m_; ++i) {
            in_s[i] = internal::spectral_entropy(rho_in[i]);
            out_s[i] = internal::spectral_entropy(rho_out[i]);
            chi_in -= p[i] * in_s[i].entropy;
            chi_out -= p[i] * out_s[i].entropy;
        }
        double value = chi_out - chi_in;

        if (grad != nullptr) {
            grad->resize(x.size());
            Eigen::VectorXd c(m_);
            for (int i = 0; i < m_; ++i) {
                // d value / d p_i at fixed states.
                c[i] = (rho_out[i] * mix_out_s.l_matrix).trace().real() - out_s[i].entropy -
                       (rho_in[i] * mix_in_s.l_matrix).trace().real() + in_s[i].entropy;

                // Wirtinger d value / d psi_i*, weight p_i.
                Eigen::Map<const RowMatrix> m_in(psis[i].data(), cut_a_, cut_b_);
                Eigen::Map<const RowMatrix> m_out(phis[i].data(), cut_a_, cut_b_);
                RowMatrix g_out_mat =
                    m_out * (mix_out_s.l_matrix - out_s[i].l_matrix).transpose();
                RowMatrix g_in_mat = m_in * (mix_in_s.l_matrix - in_s[i].l_matrix).transpose();
                Eigen::Map<const Vector> g_out(g_out_mat.data(), dim);
                Eigen::Map<const Vector> g_in(g_in_mat.data(), dim);
                Vector g_psi = p[i] * (w_.adjoint() * g_out - g_in);
                Vector g_z = internal::project_normalization(psis[i], g_psi, norms[i]);
                Eigen::VectorXd block(2 * dim);
                internal::params_from_wirtinger(g_z, &block, 0);
                grad->segment(m_ + 2 * dim * i, 2 * dim) = block;
            }
            double c_mean = p.dot(c);
            grad->head(m_) = p.array() * (c.array() - c_mean);
        }
        return value;
    }

  private:
    Matrix w_;
    int cut_a_;
    int cut_b_;
    int m_;
};

Ensemble ensemble_from_params(const Eigen::VectorXd &x, int m,
                              const std::vector<Subsystem> &layout) {
    int dim = layout_dim(layout);
    Eigen::VectorXd p = softmax(x.head(m));
    Ensemble e;
    e.probs.assign(p.data(), p.data() + m);
    e.states.reserve(m);
    for (int i = 0; i < m; ++i) {
        Vector z(dim);
        for (int k = 0; k < dim; ++k) {
            z[k] = Complex(x[m + 2 * dim * i + k], x[m + 2 * dim * i + dim + k]);
        }
        e.states.emplace_back(z / z.norm(), layout);
    }
    return e;
}

}  // namespace

double holevo_chi(const std::vector<std::pair<double, DensityMatrix>> &ensemble) {
    std::vector<double> probs;
    probs.reserve(ensemble.size());
    for (const auto &member : ensemble) {
        probs.push_back(member.first);
    }
    validate_probabilities(probs);

    int dim = ensemble.front().second.dim();
    Matrix mixture = Matrix::Zero(dim, dim);
    double mean_entropy = 0.0;
    for (const auto &[prob, rho] : ensemble) {
        if (rho.dim() != dim) {
            throw std::invalid_argument("holevo_chi: ensemble members have mixed dimensions");
        }
        mixture += prob * rho.entries();
        mean_entropy += prob * von_neumann_entropy(rho);
    }
    DensityMatrix average(mixture, ensemble.front().second.layout());
    return von_neumann_entropy(average) - mean_entropy;
}

double delta_chi_fixed_ensemble(const BipartiteGate &gate, const Ensemble &ensemble) {
    if (ensemble.probs.size() != ensemble.states.size() || ensemble.states.empty()) {
        throw std::invalid_argument("ensemble: probability and state counts differ or are zero");
    }
    validate_probabilities(ensemble.probs);
    const auto &layout = ensemble.states.front().layout();
    for (const auto &state : ensemble.states) {
        if (state.dim() != ensemble.states.front().dim()) {
            throw std::invalid_argument("ensemble members do not share a layout");
        }
    }
    if (layout[find_label(layout, "A")].dim != gate.dim_a ||
        layout[find_label(layout, "B")].dim != gate.dim_b) {
        throw std::invalid_argument("ensemble layout does not match the gate dimensions");
    }

    auto bob_layout = bob_side_layout(layout);
    std::vector<std::pair<double, DensityMatrix>> in, out;
    in.reserve(ensemble.states.size());
    out.reserve(ensemble.states.size());
    for (size_t i = 0; i < ensemble.states.size(); ++i) {
        const StateVector &psi = ensemble.states[i];
        StateVector phi = apply_to_labels(gate.matrix, {"A", "B"}, psi);
        in.emplace_back(ensemble.probs[i],
                        DensityMatrix(bob_reduction(cut_matrix(psi)), bob_layout));
        out.emplace_back(ensemble.probs[i],
                         DensityMatrix(bob_reduction(cut_matrix(phi)), bob_layout));
    }
    return holevo_chi(out) - holevo_chi(in);
}

HolevoResult optimize_delta_chi(const BipartiteGate &gate, const HolevoConfig &cfg) {
    if (cfg.restarts < 1) {
        throw std::invalid_argument("restarts must be >= 1");
    }
    if (cfg.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    int na = resolved_ancilla(cfg.ancilla_a, gate.dim_a);
    int nb = resolved_ancilla(cfg.ancilla_b, gate.dim_b);
    int m = cfg.ensemble_size == -1 ? gate.dim_a * na * gate.dim_b * nb : cfg.ensemble_size;
    if (m < 2) {
        throw std::invalid_argument("ensemble size must be >= 2");
    }

    auto layout = entcap_layout(gate, na, nb);
    int dim = layout_dim(layout);
    int param_count = holevo_parameter_count(m, dim);

    Matrix w = embed_on_labels(gate.matrix, {"A", "B"}, layout);
    HolevoObjective objective(std::move(w), gate.dim_a * na, gate.dim_b * nb, m);

    std::vector<Eigen::VectorXd> starts;
    starts.reserve(cfg.restarts + cfg.warm_starts.size());
    for (int i = 0; i < cfg.restarts; ++i) {
        Rng rng(derive_seed(cfg.seed, i));
        Eigen::VectorXd x = Eigen::VectorXd::Zero(param_count);
        for (int k = 0; k < m; ++k) {
            Vector z = rng.haar_state(dim);
            x.segment(m + 2 * dim * k, dim) = z.real();
            x.segment(m + 2 * dim * k + dim, dim) = z.imag();
        }
        starts.push_back(std::move(x));
    }
    for (const auto &warm : cfg.warm_starts) {
        if (warm.size() != param_count) {
            throw std::invalid_argument("warm start has wrong parameter count");
        }
        starts.push_back(warm);
    }

    OptimOptions options;
    options.max_iterations = cfg.max_iterations;
    options.gradient_tolerance = cfg.gradient_tolerance;
    std::vector<RestartOutcome> outcomes =
        internal::run_restarts(objective, starts, options, cfg.threads);
    const RestartOutcome &best = outcomes[internal::best_outcome(outcomes)];

    Ensemble optimal = ensemble_from_params(best.x, m, layout);
    auto bob_layout = bob_side_layout(layout);
    std::vector<std::pair<double, DensityMatrix>> in, out;
    for (int i = 0; i < m; ++i) {
        const StateVector &psi = optimal.states[i];
        StateVector phi = apply_to_labels(gate.matrix, {"A", "B"}, psi);
        in.emplace_back(optimal.probs[i],
                        DensityMatrix(bob_reduction(cut_matrix(psi)), bob_layout));
        out.emplace_back(optimal.probs[i],
                         DensityMatrix(bob_reduction(cut_matrix(phi)), bob_layout));
    }

    HolevoResult result;
    result.chi_in = holevo_chi(in);
    result.chi_out = holevo_chi(out);
    result.value = result.chi_out - result.chi_in;
    result.optimal_ensemble = std::move(optimal);
    result.converged = best.converged;
    result.seed = cfg.seed;
    result.per_restart_values.reserve(outcomes.size());
    for (const auto &o : outcomes) {
        result.per_restart_values.push_back(o.value);
    }

    double cap = 2.0 * std::log2(static_cast<double>(std::min(gate.dim_a, gate.dim_b)));
    if (result.value > cap + 1e-6) {
        throw InternalError("holevo: optimized value " + std::to_string(result.value) +
                            " exceeds the double-teleportation bound " + std::to_string(cap));
    }
    if (result.value < -1e-9) {
        throw InternalError("holevo: optimized value " + std::to_string(result.value) +
                            " is negative");
    }
    return result;
}

int default_ensemble_size(const BipartiteGate &gate, int ancilla_a, int ancilla_b) {
    int na = resolved_ancilla(ancilla_a, gate.dim_a);
    int nb = resolved_ancilla(ancilla_b, gate.dim_b);
    return gate.dim_a * na * gate.dim_b * nb;
}

int holevo_parameter_count(int ensemble_size, int state_dim) {
    return ensemble_size + 2 * ensemble_size * state_dim;
}

Eigen::VectorXd pad_ensemble_parameters(const Eigen::VectorXd &x, int ensemble_size,
                                        int state_dim, int new_ensemble_size, Rng &rng) {
    if (x.size() != holevo_parameter_count(ensemble_size, state_dim)) {
        throw std::invalid_argument("pad_ensemble_parameters: parameter count mismatch");
    }
    if (new_ensemble_size < ensemble_size) {
        throw std::invalid_argument("pad_ensemble_parameters: new size is smaller");
    }
    Eigen::VectorXd out(holevo_parameter_count(new_ensemble_size, state_dim));
    out.head(ensemble_size) = x.head(ensemble_size);
    // New members enter at vanishing probability so the objective value is
    // preserved at the warm-start point.
    double floor_logit = x.head(ensemble_size).minCoeff() - 20.0;
    for (int i = ensemble_size; i < new_ensemble_size; ++i) {
        out[i] = floor_logit;
        Vector z = rng.haar_state(state_dim);
        out.segment(new_ensemble_size + 2 * state_dim * i, state_dim) = z.real();
        out.segment(new_ensemble_size + 2 * state_dim * i + state_dim, state_dim) = z.imag();
    }
    for (int i = 0; i < ensemble_size; ++i) {
        out.segment(new_ensemble_size + 2 * state_dim * i, 2 * state_dim) =
            x.segment(ensemble_size + 2 * state_dim * i, 2 * state_dim);
    }
    return out;
}

namespace internal {

ObjectiveFn holevo_objective_fn(const BipartiteGate &gate, int ancilla_a, int ancilla_b,
                                int ensemble_size) {
    int na = resolved_ancilla(ancilla_a, gate.dim_a);
    int nb = resolved_ancilla(ancilla_b, gate.dim_b);
    int m = ensemble_size == -1 ? gate.dim_a * na * gate.dim_b * nb : ensemble_size;
    if (m < 2) {
        throw std::invalid_argument("ensemble size must be >= 2");
    }
    auto layout = entcap_layout(gate, na, nb);
    Matrix w = embed_on_labels(gate.matrix, {"A", "B"}, layout);
    return HolevoObjective(std::move(w), gate.dim_a * na, gate.dim_b * nb, m);
}

}  // namespace internal

}  // namespace gatecap
