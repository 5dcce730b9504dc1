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

#include "hamclass/local_operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <set>

namespace hamclass {

namespace {

void check_qubit_list(const std::vector<int>& qubits, const char* what) {
    std::set<int> seen;
    for (int q : qubits) {
        if (q < 0) throw std::invalid_argument(std::string(what) + " index negative");
        if (!seen.insert(q).second)
            throw std::invalid_argument(std::string(what) + " indices not distinct");
    }
}

bool is_power_of_two_dim(const Matrix& m, int k) {
    return m.rows() == m.cols() && m.rows() == static_cast<Eigen::Index>(dim(k));
}

}  // namespace

LocalOperator LocalOperator::dense(Matrix core, std::vector<int> targets) {
    return controlled({}, {}, std::move(core), std::move(targets));
}

LocalOperator LocalOperator::controlled(std::vector<int> controls, std::vector<bool> pattern,
                                        Matrix core, std::vector<int> targets) {
    if (controls.size() != pattern.size())
        throw std::invalid_argument("control pattern length mismatch");
    check_qubit_list(controls, "control");
    check_qubit_list(targets, "target");
    for (int c : controls)
        if (std::find(targets.begin(), targets.end(), c) != targets.end())
            throw std::invalid_argument("control and target qubits overlap");
    const int k = static_cast<int>(targets.size());
    if (k > kMaxDenseTargets)
        throw std::invalid_argument("dense core limited to " +
                                    std::to_string(kMaxDenseTargets) + " target qubits");
    if (!is_power_of_two_dim(core, k))
        throw std::invalid_argument("core dimension does not match target count");

    LocalOperator op;
    op.controls_ = std::move(controls);
    op.pattern_ = std::move(pattern);
    op.targets_ = std::move(targets);
    op.core_ = std::move(core);
    return op;
}

LocalOperator LocalOperator::basis_projector(std::vector<int> qubits, const std::string& bits) {
    if (qubits.size() != bits.size())
        throw std::invalid_argument("projector pattern length mismatch");
    std::vector<bool> pattern;
    pattern.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("projector pattern contains non-binary character");
        pattern.push_back(c == '1');
    }
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    return controlled(std::move(qubits), std::move(pattern), std::move(one), {});
}

std::vector<int> LocalOperator::support() const {
    std::vector<int> s = controls_;
    s.insert(s.end(), targets_.begin(), targets_.end());
    return s;
}

int LocalOperator::min_register_size() const {
    int m = 0;
    for (int q : support()) m = std::max(m, q + 1);
    return m;
}

bool LocalOperator::is_hermitian(double tol) const {
    return (core_ - core_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool LocalOperator::is_diagonal(double tol) const {
    for (Eigen::Index i = 0; i < core_.rows(); ++i)
        for (Eigen::Index j = 0; j < core_.cols(); ++j)
            if (i != j && std::abs(core_(i, j)) > tol) return false;
    return true;
}

bool LocalOperator::is_unitary(double tol) const {
    const Matrix residual = core_ * core_.adjoint() - Matrix::Identity(core_.rows(), core_.cols());
    return residual.cwiseAbs().maxCoeff() <= tol;
}

Matrix LocalOperator::support_matrix() const {
    const int c = control_count();
    const int k = target_count();
    const index_t d = dim(c + k);
    index_t ctrl_index = 0;
    for (int i = 0; i < c; ++i)
        if (pattern_[static_cast<std::size_t>(i)]) ctrl_index |= index_t{1} << (c - 1 - i);

    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    const index_t block = ctrl_index << k;
    for (index_t i = 0; i < dim(k); ++i)
        for (index_t j = 0; j < dim(k); ++j)
            full(static_cast<Eigen::Index>(block + i), static_cast<Eigen::Index>(block + j)) =
                core_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return full;
}

LocalOperator LocalOperator::with_core(Matrix core) const {
    return controlled(controls_, pattern_, std::move(core), targets_);
}

LocalOperator matrix_exp_hermitian(const LocalOperator& h, double theta) {
    if (!h.is_hermitian())
        throw std::invalid_argument("matrix_exp_hermitian: operator is not Hermitian");
    const Matrix& core = h.core();
    const auto d = core.rows();
    Matrix u(d, d);
    if (h.is_diagonal()) {
        u.setZero();
        for (Eigen::Index i = 0; i < d; ++i)
            u(i, i) = std::exp(complex_t(0.0, -theta * core(i, i).real()));
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(core);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("matrix_exp_hermitian: eigendecomposition failed");
        Eigen::VectorXcd phases(d);
        for (Eigen::Index i = 0; i < d; ++i)
            phases(i) = std::exp(complex_t(0.0, -theta * solver.eigenvalues()(i)));
        u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    }
    return h.with_core(std::move(u));
}

void WeightedTermList::add(double coefficient, LocalOperator op) {
    if (!std::isfinite(coefficient))
        throw std::invalid_argument("term coefficient must be finite");
    terms_.push_back(WeightedTerm{coefficient, std::move(op)});
}

void WeightedTermList::append(const WeightedTermList& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

int WeightedTermList::min_register_size() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.op.min_register_size());
    return m;
}

WeightedTermList WeightedTermList::scaled(double factor) const {
    WeightedTermList out = *this;
    for (auto& t : out.terms_) t.coefficient *= factor;
    return out;
}

double spectral_norm(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

Matrix dense_matrix(const LocalOperator& op, int n) {
    if (n > kOracleQubitCap)
        throw std::invalid_argument("dense matrices limited to " +
                                    std::to_string(kOracleQubitCap) + " qubits");
    if (op.min_register_size() > n)
        throw std::invalid_argument("operator does not fit the register");

    const auto& controls = op.controls();
    const auto& targets = op.targets();
    const int k = op.target_count();

    index_t ctrl_mask = 0;
    for (std::size_t i = 0; i < controls.size(); ++i)
        if (op.control_pattern()[i])
            ctrl_mask |= index_t{1} << bit_position(controls[i], n);

    std::vector<index_t> target_offset(dim(k), 0);
    for (index_t j = 0; j < dim(k); ++j)
        for (int i = 0; i < k; ++i)
            if ((j >> (k - 1 - i)) & 1)
                target_offset[j] |= index_t{1} << bit_position(targets[i], n);

    std::vector<int> fixed_positions;
    for (int c : controls) fixed_positions.push_back(bit_position(c, n));
    for (int t : targets) fixed_positions.push_back(bit_position(t, n));
    std::sort(fixed_positions.begin(), fixed_positions.end());

    const int f = n - static_cast<int>(fixed_positions.size());
    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim(n)), static_cast<Eigen::Index>(dim(n)));
    for (index_t x = 0; x < dim(f); ++x) {
        index_t base = x;
        for (int p : fixed_positions) {
            const index_t low = base & ((index_t{1} << p) - 1);
            base = ((base >> p) << (p + 1)) | low;
        }
        base |= ctrl_mask;
        for (index_t i = 0; i < dim(k); ++i)
            for (index_t j = 0; j < dim(k); ++j)
                full(static_cast<Eigen::Index>(base + target_offset[i]),
                     static_cast<Eigen::Index>(base + target_offset[j])) +=
                    op.core()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return full;
}

Matrix dense_matrix(const WeightedTermList& hamiltonian, int n) {
    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim(n)), static_cast<Eigen::Index>(dim(n)));
    for (const auto& t : hamiltonian.terms()) full += t.coefficient * dense_matrix(t.op, n);
    return full;
}

}  // namespace hamclass
