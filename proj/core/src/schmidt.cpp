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

#include "gatecap/schmidt.hpp"

#include <cmath>

namespace gatecap {

StateSchmidt state_schmidt(const StateVector &psi) {
    Matrix m = cut_matrix(psi);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    StateSchmidt out;
    out.coefficients = svd.singularValues();
    out.alice_basis = svd.matrixU();
    // amplitudes = sum_i c_i |u_i> (x) |conj(v_i)>, so Bob's basis vectors are
    // the conjugated right singular vectors.
    out.bob_basis = svd.matrixV().conjugate();
    return out;
}

OperatorSchmidt operator_schmidt(const BipartiteGate &gate) {
    const int da = gate.dim_a;
    const int db = gate.dim_b;
    // Reshuffle U[(a_out, b_out), (a_in, b_in)] -> M[(a_out, a_in), (b_out, b_in)].
    Matrix m(da * da, db * db);
    for (int a_out = 0; a_out < da; ++a_out) {
        for (int a_in = 0; a_in < da; ++a_in) {
            for (int b_out = 0; b_out < db; ++b_out) {
                for (int b_in = 0; b_in < db; ++b_in) {
                    m(a_out * da + a_in, b_out * db + b_in) =
                        gate.matrix(a_out * db + b_out, a_in * db + b_in);
                }
            }
        }
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

    OperatorSchmidt out;
    out.dim_a = da;
    out.dim_b = db;
    out.coefficients = svd.singularValues();
    int terms = static_cast<int>(out.coefficients.size());
    out.alice_factors.reserve(terms);
    out.bob_factors.reserve(terms);
    for (int i = 0; i < terms; ++i) {
        Matrix v(da, da);
        for (int r = 0; r < da; ++r) {
            for (int c = 0; c < da; ++c) {
                v(r, c) = svd.matrixU()(r * da + c, i);
            }
        }
        // M = sum_i s_i u_i conj(v_i)', so Bob factors come conjugated.
        Matrix w(db, db);
        for (int r = 0; r < db; ++r) {
            for (int c = 0; c < db; ++c) {
                w(r, c) = std::conj(svd.matrixV()(r * db + c, i));
            }
        }
        out.alice_factors.push_back(std::move(v));
        out.bob_factors.push_back(std::move(w));
    }
    return out;
}

int schmidt_number(const Eigen::VectorXd &coefficients, double rank_cutoff) {
    if (coefficients.size() == 0) {
        return 0;
    }
    double threshold = rank_cutoff * coefficients.maxCoeff();
    int count = 0;
    for (int i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] > threshold) {
            ++count;
        }
    }
    return count;
}

int schmidt_number(const OperatorSchmidt &dec, double rank_cutoff) {
    return schmidt_number(dec.coefficients, rank_cutoff);
}

int schmidt_number(const StateSchmidt &dec, double rank_cutoff) {
    return schmidt_number(dec.coefficients, rank_cutoff);
}

std::pair<double, double> schmidt_entropy_bound(const BipartiteGate &gate) {
    OperatorSchmidt dec = operator_schmidt(gate);
    double total = static_cast<double>(gate.dim_a) * gate.dim_b;
    Eigen::VectorXd probs = dec.coefficients.array().square() / total;
    double lower = entropy_of_probabilities(probs);
    double upper = std::log2(static_cast<double>(schmidt_number(dec)));
    return {lower, upper};
}

}  // namespace gatecap
