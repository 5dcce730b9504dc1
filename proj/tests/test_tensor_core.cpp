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

#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"

using namespace hamclass;
using namespace hamclass::testing;

namespace {

Matrix pauli_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix pauli_z() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("tensor-core");

TEST_CASE("dense_matrix matches the entrywise oracle on random controlled operators") {
    TestRng rng(11);
    for (int round = 0; round < 20; ++round) {
        const int n = rng.uniform_int(2, 6);
        const int k = rng.uniform_int(0, std::min(2, n - 1));
        std::vector<int> qubits(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) qubits[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) std::swap(qubits[static_cast<std::size_t>(i)],
                                                  qubits[static_cast<std::size_t>(rng.uniform_int(0, i))]);
        const int c = rng.uniform_int(0, n - k - 1);
        std::vector<int> controls(qubits.begin(), qubits.begin() + c);
        std::vector<int> targets(qubits.begin() + c, qubits.begin() + c + k);
        std::vector<bool> pattern;
        for (int i = 0; i < c; ++i) pattern.push_back(rng.uniform_int(0, 1) == 1);

        const auto op = LocalOperator::controlled(controls, pattern,
                                                  random_hermitian(rng, static_cast<int>(dim(k))),
                                                  targets);
        CHECK(max_abs_diff(dense_matrix(op, n), oracle_dense(op, n)) < 1e-12);
    }
}

TEST_CASE("operator construction rejects bad geometry") {
    CHECK_THROWS_AS(LocalOperator::dense(Matrix::Identity(4, 4), {0}), std::invalid_argument);
    CHECK_THROWS_AS(LocalOperator::dense(Matrix::Identity(4, 4), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LocalOperator::controlled({0}, {true}, Matrix::Identity(2, 2), {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LocalOperator::basis_projector({0, 1}, "1"), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(kQubitCap + 1), std::invalid_argument);
}

TEST_CASE("matrix_exp_hermitian of the zero matrix is the identity") {
    const auto h = LocalOperator::dense(Matrix::Zero(4, 4), {0, 1});
    const auto u = matrix_exp_hermitian(h, 1.7);
    CHECK(max_abs_diff(u.core(), Matrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("matrix_exp_hermitian of pauli-z at pi/2 is the diagonal phase pair") {
    const auto u = matrix_exp_hermitian(LocalOperator::dense(pauli_z(), {0}), M_PI / 2.0);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = std::exp(complex_t(0.0, -M_PI / 2.0));
    expected(1, 1) = std::exp(complex_t(0.0, M_PI / 2.0));
    CHECK(max_abs_diff(u.core(), expected) < 1e-12);
}

TEST_CASE("matrix_exp_hermitian matches the truncated power series") {
    TestRng rng(23);
    const Matrix h = random_hermitian(rng, 4);
    const auto u = matrix_exp_hermitian(LocalOperator::dense(h, {0, 1}), 0.3);
    CHECK(max_abs_diff(u.core(), power_series_exp(h, 0.3)) < 1e-9);
}

TEST_CASE("matrix_exp_hermitian outputs are unitary to 1e-10") {
    TestRng rng(37);
    for (int round = 0; round < 10; ++round) {
        const Matrix h = random_hermitian(rng, 4);
        const auto u = matrix_exp_hermitian(LocalOperator::dense(h, {0, 1}),
                                            rng.uniform() * 4.0 - 2.0);
        const Matrix residual = u.core() * u.core().adjoint() - Matrix::Identity(4, 4);
        CHECK(residual.cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("matrix_exp_hermitian rejects non-Hermitian input") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;  // not equal to its adjoint's (1,0) entry
    m(1, 0) = 2.0;
    CHECK_THROWS_AS(matrix_exp_hermitian(LocalOperator::dense(m, {0}), 0.5),
                    std::invalid_argument);
}

TEST_CASE("identity gate leaves the state unchanged") {
    TestRng rng(5);
    StateVector psi = random_state(rng, 4);
    const StateVector before = psi;
    apply_local_unitary(psi, LocalOperator::dense(Matrix::Identity(4, 4), {1, 3}));
    for (index_t i = 0; i < psi.size(); ++i) CHECK(std::abs(psi[i] - before[i]) < 1e-15);
}

TEST_CASE("bit-flip on qubit 0 maps |00> to |10>") {
    StateVector psi = StateVector::computational_basis(2, "00");
    apply_local_unitary(psi, LocalOperator::dense(pauli_x(), {0}));
    CHECK(std::abs(psi[basis_index("10")] - complex_t(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(psi[basis_index("00")]) < 1e-15);
}

TEST_CASE("controlled-u applies u exactly on the control-1 branch") {
    TestRng rng(7);
    const Matrix h = random_hermitian(rng, 2);
    const auto u = matrix_exp_hermitian(LocalOperator::controlled({0}, {true}, h, {1}), 0.9);

    // |1> (x) |psi> -> |1> (x) u|psi>
    StateVector sub = random_state(rng, 1);
    StateVector psi(2);
    psi[basis_index("10")] = sub[0];
    psi[basis_index("11")] = sub[1];
    apply_local_unitary(psi, u);

    const Eigen::VectorXcd expected = u.core() * to_eigen(sub);
    CHECK(std::abs(psi[basis_index("10")] - expected(0)) < 1e-12);
    CHECK(std::abs(psi[basis_index("11")] - expected(1)) < 1e-12);

    // |0> branch untouched
    StateVector idle(2);
    idle[basis_index("00")] = sub[0];
    idle[basis_index("01")] = sub[1];
    apply_local_unitary(idle, u);
    CHECK(std::abs(idle[basis_index("00")] - sub[0]) < 1e-15);
    CHECK(std::abs(idle[basis_index("01")] - sub[1]) < 1e-15);
}

TEST_CASE("controlled application agrees with the dense controlled matrix") {
    TestRng rng(13);
    const int n = 4;
    const Matrix h = random_hermitian(rng, 2);
    const auto gate = matrix_exp_hermitian(LocalOperator::controlled({2}, {true}, h, {0}), 0.4);

    StateVector psi = random_state(rng, n);
    Eigen::VectorXcd dense = oracle_dense(
        LocalOperator::controlled({2}, {true}, gate.core(), {0}), n) * to_eigen(psi);
    // Off-pattern identity: add the control-0 branch.
    const auto off = LocalOperator::controlled({2}, {false}, Matrix::Identity(2, 2), {0});
    dense += oracle_dense(off, n) * to_eigen(psi);

    apply_local_unitary(psi, gate);
    for (index_t i = 0; i < psi.size(); ++i)
        CHECK(std::abs(psi[i] - dense(static_cast<Eigen::Index>(i))) < 1e-12);
}

TEST_CASE("gate application rejects out-of-range targets") {
    StateVector psi(2);
    CHECK_THROWS_AS(apply_local_unitary(psi, LocalOperator::dense(Matrix::Identity(2, 2), {5})),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_local_unitary(psi, LocalOperator::dense(pauli_x() * 2.0, {0})),
                    std::invalid_argument);  // not unitary
}

TEST_CASE("norm is preserved across long random gate sequences") {
    TestRng rng(101);
    const int n = 6;
    StateVector psi = random_state(rng, n);
    const int gates = 200;
    for (int g = 0; g < gates; ++g) {
        const int a = rng.uniform_int(0, n - 1);
        int b = rng.uniform_int(0, n - 2);
        if (b >= a) ++b;
        const auto u = matrix_exp_hermitian(
            LocalOperator::dense(random_hermitian(rng, 4), {a, b}), rng.uniform() * 2.0);
        apply_local_unitary(psi, u);
    }
    CHECK(std::abs(psi.norm_squared() - 1.0) <= 1e-9 * gates);
}

TEST_CASE("gates leave marginals over disjoint qubits of a product state unchanged") {
    TestRng rng(55);
    // Product state across the (0,1) | (2,3) cut.
    StateVector left = random_state(rng, 2);
    StateVector right = random_state(rng, 2);
    StateVector psi(4);
    for (index_t i = 0; i < 4; ++i)
        for (index_t j = 0; j < 4; ++j) psi[(i << 2) | j] = left[i] * right[j];

    const auto before = data_marginal(psi, {0, 1});
    const auto u = matrix_exp_hermitian(
        LocalOperator::dense(random_hermitian(rng, 4), {2, 3}), 1.3);
    apply_local_unitary(psi, u);
    const auto after = data_marginal(psi, {0, 1});
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(before[i] - after[i]) <= 1e-12);
}

TEST_CASE("expectation on an eigenstate has zero deviation") {
    WeightedTermList h;
    h.add(1.0, LocalOperator::dense(pauli_z(), {0}));
    StateVector psi = StateVector::computational_basis(2, "10");
    const auto [mean, dev] = expectation_and_std(psi, h);
    CHECK(mean == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(dev <= 1e-8);
}

TEST_CASE("expectation of pauli-z on |+> is (0, 1)") {
    WeightedTermList h;
    h.add(1.0, LocalOperator::dense(pauli_z(), {0}));
    const auto [mean, dev] = expectation_and_std(StateVector::uniform(1), h);
    CHECK(std::abs(mean) < 1e-12);
    CHECK(dev == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation matches the dense matrix-vector oracle") {
    TestRng rng(71);
    const int n = 8;
    StateVector psi = random_state(rng, n);
    WeightedTermList h;
    for (int t = 0; t < 3; ++t) {
        const int a = rng.uniform_int(0, n - 1);
        int b = rng.uniform_int(0, n - 2);
        if (b >= a) ++b;
        h.add(rng.normal(), LocalOperator::dense(random_hermitian(rng, 4), {a, b}));
    }
    const Matrix dense = oracle_dense(h, n);
    const Eigen::VectorXcd v = to_eigen(psi);
    const double expected = (v.adjoint() * dense * v)(0).real();
    const auto [mean, dev] = expectation_and_std(psi, h);
    CHECK(std::abs(mean - expected) < 1e-9);
    const double second = (dense * v).squaredNorm();
    CHECK(dev == doctest::Approx(std::sqrt(std::max(0.0, second - expected * expected)))
                     .epsilon(1e-7));
}

TEST_CASE("data_marginal of a pinned product state is a point mass") {
    // |01> (x) |+>
    StateVector psi(3);
    psi[basis_index("010")] = 1.0 / std::sqrt(2.0);
    psi[basis_index("011")] = 1.0 / std::sqrt(2.0);
    const auto table = data_marginal_table(psi, {0, 1});
    CHECK(table.at("01") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(table.at("00") == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("data_marginal of a Bell pair is uniform on one qubit") {
    StateVector psi(2);
    psi[basis_index("00")] = 1.0 / std::sqrt(2.0);
    psi[basis_index("11")] = 1.0 / std::sqrt(2.0);
    const auto table = data_marginal(psi, {1});
    CHECK(table[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(table[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("data_marginal matches the dense density-matrix oracle") {
    TestRng rng(301);
    const int n = 6;
    StateVector psi = random_state(rng, n);
    const std::vector<int> keep{4, 1, 3};

    // Oracle: reshape psi into M[kept, environment] by bitstring surgery,
    // form the reduced density matrix M M^dag and read its diagonal.
    const int k = static_cast<int>(keep.size());
    Matrix reshaped = Matrix::Zero(static_cast<Eigen::Index>(dim(k)),
                                   static_cast<Eigen::Index>(dim(n - k)));
    for (index_t i = 0; i < psi.size(); ++i) {
        const std::string s = bitstring(i, n);
        std::string kept_bits, env_bits;
        for (int q : keep) kept_bits += s[static_cast<std::size_t>(q)];
        for (int q = 0; q < n; ++q)
            if (std::find(keep.begin(), keep.end(), q) == keep.end())
                env_bits += s[static_cast<std::size_t>(q)];
        reshaped(static_cast<Eigen::Index>(basis_index(kept_bits)),
                 static_cast<Eigen::Index>(basis_index(env_bits))) = psi[i];
    }
    const Matrix rho = reshaped * reshaped.adjoint();
    std::vector<double> expected(dim(k), 0.0);
    for (index_t i = 0; i < expected.size(); ++i)
        expected[i] = rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();

    const auto table = data_marginal(psi, keep);
    double sum = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(std::abs(table[i] - expected[i]) < 1e-10);
        sum += table[i];
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
}

TEST_CASE("data_marginal rejects an empty keep set") {
    StateVector psi = StateVector::uniform(2);
    CHECK_THROWS_AS(data_marginal(psi, {}), std::invalid_argument);
}

TEST_SUITE_END();
