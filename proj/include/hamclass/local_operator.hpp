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

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "hamclass/numeric.hpp"

namespace hamclass {

using Matrix = Eigen::MatrixXcd;

/// A local operator on a qubit register, stored in projected form
///
///     op = |pattern><pattern|_(controls) (x) core_(targets),
///
/// acting as zero outside the control pattern. Plain k-local operators have
/// no controls; a computational-basis projector |s><s| has only controls and
/// a trivial 1x1 core. The factored form is what keeps controlled training
/// terms and rank-one data projectors cheap to exponentiate and apply.
class LocalOperator {
  public:
    /// Dense operator `core` on the given target qubits (k <= 6).
    static LocalOperator dense(Matrix core, std::vector<int> targets);

    /// |pattern><pattern| on `controls` tensored with `core` on `targets`.
    /// `pattern[i]` is the required value of `controls[i]`.
    static LocalOperator controlled(std::vector<int> controls, std::vector<bool> pattern,
                                    Matrix core, std::vector<int> targets);

    /// Rank-one computational-basis projector |bits><bits| on `qubits`.
    static LocalOperator basis_projector(std::vector<int> qubits, const std::string& bits);

    const std::vector<int>& controls() const { return controls_; }
    const std::vector<bool>& control_pattern() const { return pattern_; }
    const std::vector<int>& targets() const { return targets_; }
    const Matrix& core() const { return core_; }

    int target_count() const { return static_cast<int>(targets_.size()); }
    int control_count() const { return static_cast<int>(controls_.size()); }
    /// All qubits the operator acts on non-trivially (controls then targets).
    std::vector<int> support() const;
    /// Largest qubit index touched, plus one.
    int min_register_size() const;

    bool is_hermitian(double tol = tolerances().hermiticity) const;
    bool is_diagonal(double tol = 1e-14) const;
    /// core * core^dag == 1 within tol (controlled-gate semantics).
    bool is_unitary(double tol = tolerances().unitarity) const;

    /// Operator materialized on its combined support, controls first.
    /// Zero outside the control pattern (Hamiltonian-term semantics).
    Matrix support_matrix() const;

    /// Same support and controls, core replaced.
    LocalOperator with_core(Matrix core) const;

  private:
    LocalOperator() = default;

    std::vector<int> controls_;
    std::vector<bool> pattern_;
    std::vector<int> targets_;
    Matrix core_;
};

/// exp(-i * theta * h) for Hermitian h, computed by eigendecomposition of the
/// core; controls carry through unchanged, which is exactly the controlled-u
/// identity for controlled terms.
LocalOperator matrix_exp_hermitian(const LocalOperator& h, double theta);

/// One coupling of a Hamiltonian H = sum_i a_i h_i.
struct WeightedTerm {
    double coefficient = 0.0;
    LocalOperator op;
};

/// H = sum_i a_i h_i kept as a term list; the 2^n x 2^n matrix is never
/// materialized here.
class WeightedTermList {
  public:
    WeightedTermList() = default;

    void add(double coefficient, LocalOperator op);
    void append(const WeightedTermList& other);

    const std::vector<WeightedTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    int min_register_size() const;

    /// All coefficients multiplied by `factor`.
    WeightedTermList scaled(double factor) const;

  private:
    std::vector<WeightedTerm> terms_;
};

/// Spectral norm of a small dense matrix.
double spectral_norm(const Matrix& m);

/// Dense n-qubit matrix of a term list; n <= kOracleQubitCap.
Matrix dense_matrix(const WeightedTermList& hamiltonian, int n);

/// Dense n-qubit matrix of a single operator.
Matrix dense_matrix(const LocalOperator& op, int n);

}  // namespace hamclass
