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

#include "gatecap/gates.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gatecap {

namespace {

using OrderedJson = nlohmann::ordered_json;

double unitarity_deviation(const Matrix &m) {
    Matrix gram = m.adjoint() * m;
    return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

struct MatrixFile {
    Matrix matrix;
    int dim_a = 0;
    int dim_b = 0;
};

MatrixFile read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open matrix file '" + path + "'");
    }
    OrderedJson doc;
    try {
        doc = OrderedJson::parse(in);
    } catch (const OrderedJson::parse_error &e) {
        throw std::invalid_argument("matrix file '" + path + "': JSON parse failure: " +
                                    e.what());
    }
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() != 2) {
        throw std::invalid_argument("matrix file '" + path +
                                    "': missing or malformed \"dims\" (expected [dA, dB])");
    }
    int dim_a = 0;
    int dim_b = 0;
    try {
        dim_a = doc["dims"][0].get<int>();
        dim_b = doc["dims"][1].get<int>();
    } catch (const OrderedJson::exception &) {
        throw std::invalid_argument("matrix file '" + path + "': \"dims\" entries must be integers");
    }
    if (dim_a < 1 || dim_b < 1) {
        throw std::invalid_argument("matrix file '" + path + "': dims must be >= 1");
    }
    int dim = dim_a * dim_b;
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
        throw std::invalid_argument("matrix file '" + path + "': missing \"matrix\" array");
    }
    const auto &rows = doc["matrix"];
    if (static_cast<int>(rows.size()) != dim) {
        throw std::invalid_argument("matrix file '" + path + "': dimension mismatch: expected " +
                                    std::to_string(dim) + " rows, found " +
                                    std::to_string(rows.size()));
    }
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const auto &row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument("matrix file '" + path + "': ragged or missized row " +
                                        std::to_string(r) + " (expected " + std::to_string(dim) +
                                        " entries)");
        }
        for (int c = 0; c < dim; ++c) {
            const auto &entry = row[c];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw std::invalid_argument("matrix file '" + path + "': entry (" +
                                            std::to_string(r) + "," + std::to_string(c) +
                                            ") is not a [re, im] pair");
            }
            m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return MatrixFile{std::move(m), dim_a, dim_b};
}

}  // namespace

BipartiteGate make_bipartite_gate(Matrix matrix, int dim_a, int dim_b, std::string name,
                                  std::vector<double> params, double tolerance) {
    if (dim_a < 1 || dim_b < 1) {
        throw std::invalid_argument("BipartiteGate: dimensions must be >= 1");
    }
    if (matrix.rows() != matrix.cols() ||
        matrix.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw std::invalid_argument("BipartiteGate: matrix size " + std::to_string(matrix.rows()) +
                                    " does not match dims (" + std::to_string(dim_a) + ", " +
                                    std::to_string(dim_b) + ")");
    }
    double dev = unitarity_deviation(matrix);
    if (dev > tolerance) {
        std::ostringstream msg;
        msg << "BipartiteGate '" << name << "': unitarity violation ||U'U - I||_max = " << dev
            << " exceeds " << tolerance;
        throw std::invalid_argument(msg.str());
    }
    return BipartiteGate{std::move(matrix), dim_a, dim_b, std::move(name), std::move(params)};
}

BipartiteGate cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(3, 2) = 1.0;
    m(2, 3) = 1.0;
    return make_bipartite_gate(std::move(m), 2, 2, "cnot");
}

BipartiteGate swap_gate(int d) {
    if (d < 2) {
        throw std::invalid_argument("swap: dimension must be >= 2");
    }
    Matrix m = Matrix::Zero(d * d, d * d);
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            m(y * d + x, x * d + y) = 1.0;
        }
    }
    return make_bipartite_gate(std::move(m), d, d, "swap", {static_cast<double>(d)});
}

BipartiteGate j_gate() {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = r;
    m(3, 0) = r;
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    m(0, 3) = r;
    m(3, 3) = -r;
    return make_bipartite_gate(std::move(m), 2, 2, "j");
}

BipartiteGate cp(int d) {
    if (d < 2) {
        throw std::invalid_argument("cp: dimension must be >= 2");
    }
    Matrix m = Matrix::Zero(d * d, d * d);
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            if (y != 0) {
                m(x * d + (y - 1), x * d + y) = 1.0;
            } else {
                m(((x - 1 + d) % d) * d + (d - 1), x * d) = 1.0;
            }
        }
    }
    return make_bipartite_gate(std::move(m), d, d, "cp", {static_cast<double>(d)});
}

BipartiteGate ae(int d) {
    if (d < 2) {
        throw std::invalid_argument("ae: dimension must be >= 2");
    }
    Matrix m = Matrix::Identity(d * d, d * d);
    for (int x = 1; x < d; ++x) {
        m(x * d, x * d) = 0.0;
        m(x * d + x, x * d + x) = 0.0;
        m(x * d + x, x * d) = 1.0;
        m(x * d, x * d + x) = 1.0;
    }
    return make_bipartite_gate(std::move(m), d, d, "ae", {static_cast<double>(d)});
}

BipartiteGate phase_gate(double alpha) {
    BipartiteGate gate = matrix_exponential(zz_hamiltonian(), alpha);
    gate.name = "phase";
    gate.params = {alpha};
    return gate;
}

BipartiteGate adjoint(const BipartiteGate &gate) {
    return BipartiteGate{gate.matrix.adjoint(), gate.dim_a, gate.dim_b, gate.name + "^dag",
                         gate.params};
}

BipartiteGate role_swapped(const BipartiteGate &gate) {
    int da = gate.dim_a;
    int db = gate.dim_b;
    Matrix m(da * db, da * db);
    for (int a_out = 0; a_out < da; ++a_out) {
        for (int b_out = 0; b_out < db; ++b_out) {
            for (int a_in = 0; a_in < da; ++a_in) {
                for (int b_in = 0; b_in < db; ++b_in) {
                    m(b_out * da + a_out, b_in * da + a_in) =
                        gate.matrix(a_out * db + b_out, a_in * db + b_in);
                }
            }
        }
    }
    return BipartiteGate{std::move(m), db, da, gate.name + "[roles-swapped]", gate.params};
}

Hamiltonian zz_hamiltonian() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    m(2, 2) = -1.0;
    m(3, 3) = 1.0;
    return make_hamiltonian(std::move(m), 2, 2, "zz");
}

Hamiltonian xx_yy_hamiltonian(double alpha, double beta) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 3) = alpha - beta;
    m(3, 0) = alpha - beta;
    m(1, 2) = alpha + beta;
    m(2, 1) = alpha + beta;
    return make_hamiltonian(std::move(m), 2, 2, "xxyy");
}

Hamiltonian z_local_hamiltonian() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return make_hamiltonian(std::move(m), 2, 2, "zlocal");
}

Hamiltonian zero_hamiltonian(int dim_a, int dim_b) {
    return make_hamiltonian(Matrix::Zero(dim_a * dim_b, dim_a * dim_b), dim_a, dim_b, "zero");
}

BipartiteGate matrix_exponential(const Hamiltonian &h, double s) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries);
    Vector phases(solver.eigenvalues().size());
    for (int i = 0; i < phases.size(); ++i) {
        double angle = -s * solver.eigenvalues()[i];
        phases[i] = Complex(std::cos(angle), std::sin(angle));
    }
    Matrix m = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    return make_bipartite_gate(std::move(m), h.dim_a, h.dim_b, "exp(-i*s*" + h.name + ")", {s});
}

BipartiteGate gate_from_file(const std::string &path) {
    MatrixFile file = read_matrix_file(path);
    double dev = unitarity_deviation(file.matrix);
    if (dev > 1e-8) {
        std::ostringstream msg;
        msg << "matrix file '" << path << "': unitarity violation ||U'U - I||_max = " << dev
            << " exceeds 1e-8";
        throw std::invalid_argument(msg.str());
    }
    return BipartiteGate{std::move(file.matrix), file.dim_a, file.dim_b, "file", {}};
}

Hamiltonian hamiltonian_from_file(const std::string &path) {
    MatrixFile file = read_matrix_file(path);
    return make_hamiltonian(std::move(file.matrix), file.dim_a, file.dim_b, "file");
}

std::string matrix_to_json(const Matrix &m, int dim_a, int dim_b) {
    OrderedJson doc;
    doc["dims"] = {dim_a, dim_b};
    OrderedJson rows = OrderedJson::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc.dump();
}

std::string file_digest(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file '" + path + "' for digest");
    }
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char chunk[4096];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 0x100000001b3ULL;
        }
        if (!in) {
            break;
        }
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << hash;
    return out.str();
}

}  // namespace gatecap
