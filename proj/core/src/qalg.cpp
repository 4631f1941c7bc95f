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

#include "gatecap/qalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gatecap {

namespace {

// Mixed-radix digit strides for a layout, row-major (first subsystem most
// significant).
std::vector<int> layout_strides(const std::vector<Subsystem> &layout) {
    std::vector<int> strides(layout.size());
    int acc = 1;
    for (int i = static_cast<int>(layout.size()) - 1; i >= 0; --i) {
        strides[i] = acc;
        acc *= layout[i].dim;
    }
    return strides;
}

void validate_layout(const std::vector<Subsystem> &layout) {
    std::set<std::string> seen;
    for (const auto &sub : layout) {
        if (sub.dim < 1) {
            throw std::invalid_argument("layout: subsystem '" + sub.label +
                                        "' has dimension < 1");
        }
        if (!seen.insert(sub.label).second) {
            throw std::invalid_argument("layout: duplicate label '" + sub.label + "'");
        }
    }
}

Eigen::VectorXd clamped_eigenvalues(const Matrix &rho, const char *context) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
    Eigen::VectorXd vals = solver.eigenvalues();
    for (int i = 0; i < vals.size(); ++i) {
        if (vals[i] < -kEigenvalueSlack) {
            std::ostringstream msg;
            msg << context << ": eigenvalue " << vals[i] << " below -" << kEigenvalueSlack;
            throw std::invalid_argument(msg.str());
        }
        vals[i] = std::max(vals[i], 0.0);
    }
    return vals;
}

}  // namespace

int layout_dim(const std::vector<Subsystem> &layout) {
    int acc = 1;
    for (const auto &sub : layout) {
        acc *= sub.dim;
    }
    return acc;
}

int find_label(const std::vector<Subsystem> &layout, const std::string &label) {
    for (size_t i = 0; i < layout.size(); ++i) {
        if (layout[i].label == label) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument("unknown subsystem label '" + label + "'");
}

StateVector::StateVector(Vector amplitudes, std::vector<Subsystem> layout)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
    validate_layout(layout_);
    if (layout_dim(layout_) != amplitudes_.size()) {
        throw std::invalid_argument("StateVector: layout dimension product " +
                                    std::to_string(layout_dim(layout_)) +
                                    " != amplitude count " +
                                    std::to_string(amplitudes_.size()));
    }
    double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm2) +
                                    " is not 1 within 1e-12");
    }
}

int StateVector::side_dim(Side side) const {
    int acc = 1;
    for (const auto &sub : layout_) {
        if (sub.side == side) {
            acc *= sub.dim;
        }
    }
    return acc;
}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<Subsystem> layout)
    : entries_(std::move(entries)), layout_(std::move(layout)) {
    validate_layout(layout_);
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("DensityMatrix: matrix is not square");
    }
    if (layout_dim(layout_) != entries_.rows()) {
        throw std::invalid_argument("DensityMatrix: layout dimension product != matrix size");
    }
    double herm_err = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10) {
        throw std::invalid_argument("DensityMatrix: not Hermitian (deviation " +
                                    std::to_string(herm_err) + ")");
    }
    double trace_err = std::abs(entries_.trace() - Complex(1.0, 0.0));
    if (trace_err > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                    std::to_string(trace_err));
    }
    clamped_eigenvalues(entries_, "DensityMatrix");
}

Hamiltonian make_hamiltonian(Matrix entries, int dim_a, int dim_b, std::string name) {
    if (dim_a < 1 || dim_b < 1) {
        throw std::invalid_argument("Hamiltonian: dimensions must be >= 1");
    }
    if (entries.rows() != entries.cols() ||
        entries.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw std::invalid_argument("Hamiltonian: matrix size does not match dims");
    }
    double herm_err = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10) {
        throw std::invalid_argument("Hamiltonian: not Hermitian (deviation " +
                                    std::to_string(herm_err) + ")");
    }
    return Hamiltonian{std::move(entries), dim_a, dim_b, std::move(name)};
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    Vector amps(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        amps.segment(static_cast<Eigen::Index>(i) * b.dim(), b.dim()) =
            a.amplitudes()[i] * b.amplitudes();
    }
    std::vector<Subsystem> layout = a.layout();
    layout.insert(layout.end(), b.layout().begin(), b.layout().end());
    return StateVector(std::move(amps), std::move(layout));
}

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b) {
    std::vector<Subsystem> layout = a.layout();
    layout.insert(layout.end(), b.layout().begin(), b.layout().end());
    return DensityMatrix(kron(a.entries(), b.entries()), std::move(layout));
}

DensityMatrix density_from_state(const StateVector &psi) {
    Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(std::move(rho), psi.layout());
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<std::string> &keep) {
    const auto &layout = rho.layout();
    std::vector<bool> kept(layout.size(), false);
    for (const auto &label : keep) {
        kept[find_label(layout, label)] = true;
    }

    std::vector<Subsystem> keep_layout;
    std::vector<int> keep_idx;
    std::vector<int> trace_idx;
    for (size_t i = 0; i < layout.size(); ++i) {
        if (kept[i]) {
            keep_layout.push_back(layout[i]);
            keep_idx.push_back(static_cast<int>(i));
        } else {
            trace_idx.push_back(static_cast<int>(i));
        }
    }
    int keep_dim = layout_dim(keep_layout);
    int trace_dim = rho.dim() / keep_dim;
    auto strides = layout_strides(layout);

    // Full index of (kept multi-index k, traced multi-index t).
    auto full_index = [&](int k, int t) {
        int idx = 0;
        for (int i = static_cast<int>(keep_idx.size()) - 1; i >= 0; --i) {
            int d = layout[keep_idx[i]].dim;
            idx += (k % d) * strides[keep_idx[i]];
            k /= d;
        }
        for (int i = static_cast<int>(trace_idx.size()) - 1; i >= 0; --i) {
            int d = layout[trace_idx[i]].dim;
            idx += (t % d) * strides[trace_idx[i]];
            t /= d;
        }
        return idx;
    };

    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (int r = 0; r < keep_dim; ++r) {
        for (int c = 0; c < keep_dim; ++c) {
            Complex acc = 0.0;
            for (int t = 0; t < trace_dim; ++t) {
                acc += rho.entries()(full_index(r, t), full_index(c, t));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(std::move(out), std::move(keep_layout));
}

double entropy_of_probabilities(const Eigen::VectorXd &p) {
    double s = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] > kEntropyCutoff) {
            s -= p[i] * std::log2(p[i]);
        }
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    Eigen::VectorXd vals = clamped_eigenvalues(rho.entries(), "von_neumann_entropy");
    return entropy_of_probabilities(vals);
}

Matrix cut_matrix(const StateVector &psi) {
    const auto &layout = psi.layout();
    auto strides = layout_strides(layout);
    std::vector<int> alice_idx;
    std::vector<int> bob_idx;
    for (size_t i = 0; i < layout.size(); ++i) {
        (layout[i].side == Side::alice ? alice_idx : bob_idx).push_back(static_cast<int>(i));
    }
    int da = psi.side_dim(Side::alice);
    int db = psi.side_dim(Side::bob);

    auto side_offset = [&](const std::vector<int> &idx, int m) {
        int offset = 0;
        for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
            int d = layout[idx[i]].dim;
            offset += (m % d) * strides[idx[i]];
            m /= d;
        }
        return offset;
    };

    std::vector<int> alice_offsets(da);
    for (int r = 0; r < da; ++r) {
        alice_offsets[r] = side_offset(alice_idx, r);
    }
    std::vector<int> bob_offsets(db);
    for (int c = 0; c < db; ++c) {
        bob_offsets[c] = side_offset(bob_idx, c);
    }

    Matrix m(da, db);
    for (int r = 0; r < da; ++r) {
        for (int c = 0; c < db; ++c) {
            m(r, c) = psi.amplitudes()[alice_offsets[r] + bob_offsets[c]];
        }
    }
    return m;
}

double entanglement_entropy(const StateVector &psi) {
    Matrix m = cut_matrix(psi);
    // Eigenvalues of the smaller Gram matrix = squared Schmidt coefficients.
    Matrix gram = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
    Eigen::VectorXd vals = clamped_eigenvalues(gram, "entanglement_entropy");
    return entropy_of_probabilities(vals);
}

double fidelity(const StateVector &psi, const DensityMatrix &rho) {
    if (psi.dim() != rho.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    Complex val = psi.amplitudes().adjoint() * rho.entries() * psi.amplitudes();
    return std::clamp(val.real(), 0.0, 1.0);
}

double state_fidelity(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("state_fidelity: dimension mismatch");
    }
    Complex overlap = a.amplitudes().adjoint() * b.amplitudes();
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

Vector phi_vector(int n) {
    if (n < 1) {
        throw std::invalid_argument("phi_vector: dimension must be >= 1");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(n) * n);
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<Eigen::Index>(i) * n + i] = amp;
    }
    return v;
}

StateVector basis_state(const std::vector<Subsystem> &layout, const std::vector<int> &digits) {
    if (digits.size() != layout.size()) {
        throw std::invalid_argument("basis_state: digit count != layout size");
    }
    auto strides = layout_strides(layout);
    int idx = 0;
    for (size_t i = 0; i < layout.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= layout[i].dim) {
            throw std::invalid_argument("basis_state: digit out of range for '" +
                                        layout[i].label + "'");
        }
        idx += digits[i] * strides[i];
    }
    Vector amps = Vector::Zero(layout_dim(layout));
    amps[idx] = 1.0;
    return StateVector(std::move(amps), layout);
}

namespace {

struct LabelPlan {
    std::vector<int> op_strides;    // full-space stride of each op label digit
    std::vector<int> op_dims;
    int op_dim = 1;
    std::vector<int> rest_offsets;  // full-space offsets of the non-op digits
};

LabelPlan make_plan(const std::vector<std::string> &labels,
                    const std::vector<Subsystem> &layout) {
    LabelPlan plan;
    auto strides = layout_strides(layout);
    std::vector<bool> is_op(layout.size(), false);
    for (const auto &label : labels) {
        int pos = find_label(layout, label);
        if (is_op[pos]) {
            throw std::invalid_argument("duplicate op label '" + label + "'");
        }
        is_op[pos] = true;
        plan.op_strides.push_back(strides[pos]);
        plan.op_dims.push_back(layout[pos].dim);
        plan.op_dim *= layout[pos].dim;
    }
    std::vector<int> rest_idx;
    for (size_t i = 0; i < layout.size(); ++i) {
        if (!is_op[i]) {
            rest_idx.push_back(static_cast<int>(i));
        }
    }
    int rest_dim = 1;
    for (int i : rest_idx) {
        rest_dim *= layout[i].dim;
    }
    plan.rest_offsets.resize(rest_dim);
    for (int m = 0; m < rest_dim; ++m) {
        int offset = 0;
        int v = m;
        for (int i = static_cast<int>(rest_idx.size()) - 1; i >= 0; --i) {
            int d = layout[rest_idx[i]].dim;
            offset += (v % d) * strides[rest_idx[i]];
            v /= d;
        }
        plan.rest_offsets[m] = offset;
    }
    return plan;
}

int op_offset(const LabelPlan &plan, int op_index) {
    int offset = 0;
    for (int i = static_cast<int>(plan.op_dims.size()) - 1; i >= 0; --i) {
        offset += (op_index % plan.op_dims[i]) * plan.op_strides[i];
        op_index /= plan.op_dims[i];
    }
    return offset;
}

}  // namespace

StateVector apply_to_labels(const Matrix &op, const std::vector<std::string> &labels,
                            const StateVector &psi) {
    LabelPlan plan = make_plan(labels, psi.layout());
    if (op.rows() != op.cols() || op.rows() != plan.op_dim) {
        throw std::invalid_argument("apply_to_labels: operator size " +
                                    std::to_string(op.rows()) + " != subsystem dimension " +
                                    std::to_string(plan.op_dim));
    }
    std::vector<int> offsets(plan.op_dim);
    for (int u = 0; u < plan.op_dim; ++u) {
        offsets[u] = op_offset(plan, u);
    }
    Vector out = Vector::Zero(psi.dim());
    for (int rest : plan.rest_offsets) {
        for (int u = 0; u < plan.op_dim; ++u) {
            Complex acc = 0.0;
            for (int v = 0; v < plan.op_dim; ++v) {
                acc += op(u, v) * psi.amplitudes()[rest + offsets[v]];
            }
            out[rest + offsets[u]] = acc;
        }
    }
    return StateVector(std::move(out), psi.layout());
}

Matrix embed_on_labels(const Matrix &op, const std::vector<std::string> &labels,
                       const std::vector<Subsystem> &layout) {
    LabelPlan plan = make_plan(labels, layout);
    if (op.rows() != op.cols() || op.rows() != plan.op_dim) {
        throw std::invalid_argument("embed_on_labels: operator size " +
                                    std::to_string(op.rows()) + " != subsystem dimension " +
                                    std::to_string(plan.op_dim));
    }
    std::vector<int> offsets(plan.op_dim);
    for (int u = 0; u < plan.op_dim; ++u) {
        offsets[u] = op_offset(plan, u);
    }
    int dim = layout_dim(layout);
    Matrix out = Matrix::Zero(dim, dim);
    for (int rest : plan.rest_offsets) {
        for (int u = 0; u < plan.op_dim; ++u) {
            for (int v = 0; v < plan.op_dim; ++v) {
                out(rest + offsets[u], rest + offsets[v]) = op(u, v);
            }
        }
    }
    return out;
}

StateVector reorder(const StateVector &psi, const std::vector<std::string> &new_order) {
    const auto &layout = psi.layout();
    if (new_order.size() != layout.size()) {
        throw std::invalid_argument("reorder: label count mismatch");
    }
    auto strides = layout_strides(layout);
    std::vector<Subsystem> new_layout;
    std::vector<int> old_strides;
    for (const auto &label : new_order) {
        int pos = find_label(layout, label);
        new_layout.push_back(layout[pos]);
        old_strides.push_back(strides[pos]);
    }
    Vector out(psi.dim());
    int dim = psi.dim();
    for (int idx = 0; idx < dim; ++idx) {
        int old_idx = 0;
        int v = idx;
        for (int i = static_cast<int>(new_layout.size()) - 1; i >= 0; --i) {
            old_idx += (v % new_layout[i].dim) * old_strides[i];
            v /= new_layout[i].dim;
        }
        out[idx] = psi.amplitudes()[old_idx];
    }
    return StateVector(std::move(out), std::move(new_layout));
}

ProjectionResult project_pair(const StateVector &psi, const std::string &label1,
                              const std::string &label2, const Vector &bra) {
    const auto &layout = psi.layout();
    int p1 = find_label(layout, label1);
    int p2 = find_label(layout, label2);
    if (p1 == p2) {
        throw std::invalid_argument("project_pair: labels must differ");
    }
    int d1 = layout[p1].dim;
    int d2 = layout[p2].dim;
    if (bra.size() != static_cast<Eigen::Index>(d1) * d2) {
        throw std::invalid_argument("project_pair: bra dimension mismatch");
    }
    auto strides = layout_strides(layout);

    std::vector<Subsystem> rest_layout;
    std::vector<int> rest_idx;
    for (size_t i = 0; i < layout.size(); ++i) {
        if (static_cast<int>(i) != p1 && static_cast<int>(i) != p2) {
            rest_layout.push_back(layout[i]);
            rest_idx.push_back(static_cast<int>(i));
        }
    }
    int rest_dim = rest_layout.empty() ? 1 : layout_dim(rest_layout);

    Vector out(rest_dim);
    for (int m = 0; m < rest_dim; ++m) {
        int offset = 0;
        int v = m;
        for (int i = static_cast<int>(rest_idx.size()) - 1; i >= 0; --i) {
            int d = layout[rest_idx[i]].dim;
            offset += (v % d) * strides[rest_idx[i]];
            v /= d;
        }
        Complex acc = 0.0;
        for (int x = 0; x < d1; ++x) {
            for (int y = 0; y < d2; ++y) {
                acc += std::conj(bra[static_cast<Eigen::Index>(x) * d2 + y]) *
                       psi.amplitudes()[offset + x * strides[p1] + y * strides[p2]];
            }
        }
        out[m] = acc;
    }
    double prob = out.squaredNorm() / bra.squaredNorm();
    if (prob < 1e-300) {
        throw std::invalid_argument("project_pair: outcome has zero probability");
    }
    out /= out.norm();
    if (rest_layout.empty()) {
        rest_layout.push_back(Subsystem{"trivial", 1, Side::alice});
    }
    return ProjectionResult{StateVector(std::move(out), std::move(rest_layout)), prob};
}

}  // namespace gatecap
