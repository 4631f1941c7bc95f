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

#ifndef GATECAP_QALG_HPP
#define GATECAP_QALG_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gatecap/errors.hpp"
#include "gatecap/rng.hpp"

namespace gatecap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Eigenvalues below this are treated as exact zeros in entropies.
inline constexpr double kEntropyCutoff = 1e-12;
// Numerical-noise negative eigenvalues in [-kEigenvalueSlack, 0) are clamped
// to zero; anything more negative is a genuine invariant violation.
inline constexpr double kEigenvalueSlack = 1e-10;

enum class Side { alice, bob };

struct Subsystem {
    std::string label;
    int dim = 0;
    Side side = Side::alice;
};

int layout_dim(const std::vector<Subsystem> &layout);
int find_label(const std::vector<Subsystem> &layout, const std::string &label);

// Pure multipartite state. Subsystem index order is row-major over the layout
// list (the first subsystem is the most significant index); every module
// shares this convention. The bipartite cut is carried per-subsystem via
// Subsystem::side.
class StateVector {
  public:
    StateVector(Vector amplitudes, std::vector<Subsystem> layout);

    const Vector &amplitudes() const { return amplitudes_; }
    const std::vector<Subsystem> &layout() const { return layout_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }
    int side_dim(Side side) const;

  private:
    Vector amplitudes_;
    std::vector<Subsystem> layout_;
};

class DensityMatrix {
  public:
    DensityMatrix(Matrix entries, std::vector<Subsystem> layout);

    const Matrix &entries() const { return entries_; }
    const std::vector<Subsystem> &layout() const { return layout_; }
    int dim() const { return static_cast<int>(entries_.rows()); }

  private:
    Matrix entries_;
    std::vector<Subsystem> layout_;
};

struct Hamiltonian {
    Matrix entries;
    int dim_a = 0;
    int dim_b = 0;
    std::string name;
};

// Validates Hermiticity (1e-10) and the dimension product.
Hamiltonian make_hamiltonian(Matrix entries, int dim_a, int dim_b, std::string name);

Matrix kron(const Matrix &a, const Matrix &b);
StateVector tensor_product(const StateVector &a, const StateVector &b);
DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b);

DensityMatrix density_from_state(const StateVector &psi);
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<std::string> &keep);

// -sum lambda log2 lambda over eigenvalues, 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix &rho);
double entropy_of_probabilities(const Eigen::VectorXd &p);

// Amplitudes gathered into a (Alice side) x (Bob side) matrix; Alice labels
// keep their layout order, likewise Bob labels.
Matrix cut_matrix(const StateVector &psi);

// Entropy of either reduced state across the cut, in ebits.
double entanglement_entropy(const StateVector &psi);

// <psi|rho|psi>.
double fidelity(const StateVector &psi, const DensityMatrix &rho);
// |<a|b>|^2.
double state_fidelity(const StateVector &a, const StateVector &b);

// (1/sqrt(n)) sum_i |ii>, as a raw n^2 amplitude vector.
Vector phi_vector(int n);

StateVector basis_state(const std::vector<Subsystem> &layout, const std::vector<int> &digits);

// Applies `op` to the named subsystems (op index order = label order given).
StateVector apply_to_labels(const Matrix &op, const std::vector<std::string> &labels,
                            const StateVector &psi);

// Dense full-space matrix acting as `op` on the named subsystems and as the
// identity elsewhere. Built once and reused in optimizer hot loops.
Matrix embed_on_labels(const Matrix &op, const std::vector<std::string> &labels,
                       const std::vector<Subsystem> &layout);

// Reorders subsystems to the given label order (pure relabeling of indices).
StateVector reorder(const StateVector &psi, const std::vector<std::string> &new_order);

// Projects the joint index of two subsystems onto <bra|, removing both from
// the layout. Returns the normalized remainder and the outcome probability.
struct ProjectionResult {
    StateVector state;
    double probability;
};
ProjectionResult project_pair(const StateVector &psi, const std::string &label1,
                              const std::string &label2, const Vector &bra);

}  // namespace gatecap

#endif
