// Copyright 2026 The hamclass developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamclass/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamclass {

double Spectrum::degeneracy_window() const {
    const double spread = eigenvalues(eigenvalues.size() - 1) - eigenvalues(0);
    return tolerances().degeneracy * (spread + 1.0);
}

int Spectrum::ground_dimension() const {
    const double cutoff = ground_energy() + degeneracy_window();
    int d = 0;
    while (d < eigenvalues.size() && eigenvalues(d) <= cutoff) ++d;
    return d;
}

Matrix Spectrum::ground_projector() const {
    const int d = ground_dimension();
    const Matrix basis = eigenvectors.leftCols(d);
    return basis * basis.adjoint();
}

Spectrum exact_spectrum_dense(const Matrix& hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols())
        throw std::invalid_argument("exact_spectrum: matrix is not square");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("exact_spectrum: eigendecomposition failed");
    Spectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.eigenvectors = solver.eigenvectors();
    return s;
}

Spectrum exact_spectrum(const WeightedTermList& hamiltonian, int n) {
    if (n > kOracleQubitCap)
        throw std::invalid_argument("exact diagonalization limited to " +
                                    std::to_string(kOracleQubitCap) + " qubits");
    if (hamiltonian.min_register_size() > n)
        throw std::invalid_argument("Hamiltonian does not fit the register");
    return exact_spectrum_dense(dense_matrix(hamiltonian, n));
}

std::vector<double> partial_trace_diagonal(const Matrix& hamiltonian, int n,
                                           const std::vector<int>& keep) {
    if (hamiltonian.rows() != static_cast<Eigen::Index>(dim(n)))
        throw std::invalid_argument("matrix dimension does not match register");
    if (keep.empty()) throw std::invalid_argument("partial_trace_diagonal: empty keep set");
    const int k = static_cast<int>(keep.size());
    std::vector<double> out(dim(k), 0.0);
    for (index_t i = 0; i < dim(n); ++i) {
        index_t bucket = 0;
        for (int j = 0; j < k; ++j)
            bucket = (bucket << 1) | static_cast<index_t>(get_qubit(i, keep[j], n));
        out[bucket] += hamiltonian(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    }
    return out;
}

std::vector<double> ground_space_data_marginal(const Spectrum& spectrum, int n,
                                               const std::vector<int>& data_qubits) {
    const int d = spectrum.ground_dimension();
    std::vector<double> marginal(dim(static_cast<int>(data_qubits.size())), 0.0);
    for (int j = 0; j < d; ++j) {
        StateVector v(n);
        for (index_t i = 0; i < v.size(); ++i)
            v[i] = spectrum.eigenvectors(static_cast<Eigen::Index>(i), j);
        const auto part = data_marginal(v, data_qubits);
        for (std::size_t i = 0; i < part.size(); ++i) marginal[i] += part[i] / d;
    }
    return marginal;
}

std::vector<double> ground_space_data_marginal(const WeightedTermList& hamiltonian, int n,
                                               const std::vector<int>& data_qubits) {
    return ground_space_data_marginal(exact_spectrum(hamiltonian, n), n, data_qubits);
}

OverlapScores overlap_scores(const WeightedTermList& hamiltonian, int n,
                             const std::vector<int>& data_qubits, const LabeledDataset& dataset) {
    const Spectrum spectrum = exact_spectrum(hamiltonian, n);
    const int d = spectrum.ground_dimension();
    const int hidden_count = n - static_cast<int>(data_qubits.size());
    const double hidden_weight = 1.0 / static_cast<double>(dim(hidden_count));

    // <l| tr_h(P_gs) |l> accumulated from the eigenvector marginals, without
    // forming the 2^n x 2^n projector.
    std::vector<double> traced(dim(static_cast<int>(data_qubits.size())), 0.0);
    for (int j = 0; j < d; ++j) {
        StateVector v(n);
        for (index_t i = 0; i < v.size(); ++i)
            v[i] = spectrum.eigenvectors(static_cast<Eigen::Index>(i), j);
        const auto part = data_marginal(v, data_qubits);
        for (std::size_t i = 0; i < part.size(); ++i) traced[i] += part[i];
    }

    OverlapScores scores;
    auto evaluate_side = [&](const std::vector<std::string>& side, std::vector<double>& out) {
        double acc = 0.0;
        for (const auto& l : side) {
            const double score = traced[basis_index(l)] * hidden_weight;
            out.push_back(score);
            acc += score;
        }
        return side.empty() ? 0.0 : acc / static_cast<double>(side.size());
    };
    scores.yes_mean = evaluate_side(dataset.yes(), scores.yes_scores);
    scores.no_mean = evaluate_side(dataset.no(), scores.no_scores);
    return scores;
}

std::vector<double> principal_angles(const Matrix& basis_a, const Matrix& basis_b) {
    if (basis_a.rows() != basis_b.rows())
        throw std::invalid_argument("principal_angles: ambient dimensions differ");
    const Matrix overlap = basis_a.adjoint() * basis_b;
    Eigen::JacobiSVD<Matrix> svd(overlap);
    std::vector<double> angles;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
        angles.push_back(std::acos(c));
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

Matrix control_block(const Matrix& hamiltonian, int n, const std::vector<int>& fixed_qubits,
                     index_t pattern_value) {
    const int m = static_cast<int>(fixed_qubits.size());
    const int rest = n - m;
    index_t fixed_mask = 0;
    for (int i = 0; i < m; ++i)
        if ((pattern_value >> (m - 1 - i)) & 1)
            fixed_mask |= index_t{1} << bit_position(fixed_qubits[i], n);

    std::vector<int> fixed_positions;
    for (int q : fixed_qubits) fixed_positions.push_back(bit_position(q, n));
    std::sort(fixed_positions.begin(), fixed_positions.end());

    auto expand = [&](index_t x) {
        for (int p : fixed_positions) {
            const index_t low = x & ((index_t{1} << p) - 1);
            x = ((x >> p) << (p + 1)) | low;
        }
        return x | fixed_mask;
    };

    Matrix block(static_cast<Eigen::Index>(dim(rest)), static_cast<Eigen::Index>(dim(rest)));
    for (index_t i = 0; i < dim(rest); ++i)
        for (index_t j = 0; j < dim(rest); ++j)
            block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                hamiltonian(static_cast<Eigen::Index>(expand(i)),
                            static_cast<Eigen::Index>(expand(j)));
    return block;
}

}  // namespace hamclass
