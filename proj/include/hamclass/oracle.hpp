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
#pragma once

#include <vector>

#include "hamclass/model.hpp"
#include "hamclass/state_vector.hpp"

namespace hamclass {

/// Full Hermitian eigendecomposition of a materialized Hamiltonian,
/// eigenvalues ascending.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;  // columns, aligned with eigenvalues

    double ground_energy() const { return eigenvalues(0); }
    /// Window below which eigenvalues count as ground states:
    /// 1e-7 * (spread + 1), relative to the minimum.
    double degeneracy_window() const;
    int ground_dimension() const;
    /// Projector onto the ground space.
    Matrix ground_projector() const;
};

/// Dense exact diagonalization, n <= kOracleQubitCap.
Spectrum exact_spectrum(const WeightedTermList& hamiltonian, int n);
Spectrum exact_spectrum_dense(const Matrix& hamiltonian);

/// Diagonal of the partial trace over everything but `keep`, indexed by the
/// kept-register bit pattern.
std::vector<double> partial_trace_diagonal(const Matrix& hamiltonian, int n,
                                           const std::vector<int>& keep);

/// Uniform mixture over the ground space, partial-traced to the data
/// register; the diagonal is a probability table over data bitstrings.
std::vector<double> ground_space_data_marginal(const WeightedTermList& hamiltonian, int n,
                                               const std::vector<int>& data_qubits);
std::vector<double> ground_space_data_marginal(const Spectrum& spectrum, int n,
                                               const std::vector<int>& data_qubits);

struct OverlapScores {
    std::vector<double> yes_scores;
    std::vector<double> no_scores;
    double yes_mean = 0.0;
    double no_mean = 0.0;
};

/// Per-datum overlap with the ground space: tr(P_gs * rho_l) where rho_l
/// pins the data register to |l> and leaves the rest maximally mixed. Lies
/// in [0,1] and equals <l|P_gs|l> when the register is all data.
OverlapScores overlap_scores(const WeightedTermList& hamiltonian, int n,
                             const std::vector<int>& data_qubits, const LabeledDataset& dataset);

/// Principal angles (radians, ascending) between the column spans of two
/// orthonormal bases; secondary route for rank-deficient subspace checks.
std::vector<double> principal_angles(const Matrix& basis_a, const Matrix& basis_b);

/// Sub-block of a dense Hamiltonian with `fixed_qubits` pinned to the bits
/// of `pattern_value` (most significant bit first), rows and columns over
/// the remaining qubits in register order.
Matrix control_block(const Matrix& hamiltonian, int n, const std::vector<int>& fixed_qubits,
                     index_t pattern_value);

}  // namespace hamclass
