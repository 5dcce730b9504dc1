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

#include "hamclass/state_vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace hamclass {

StateVector::StateVector(int n) : n_(n) {
    if (n < 1 || n > kQubitCap)
        throw std::invalid_argument("qubit count outside [1, " + std::to_string(kQubitCap) + "]");
    amps_.assign(dim(n), complex_t(0.0, 0.0));
}

StateVector StateVector::computational_basis(int n, const std::string& bits) {
    if (static_cast<int>(bits.size()) != n)
        throw std::invalid_argument("bitstring length does not match register size");
    return computational_basis(n, basis_index(bits));
}

StateVector StateVector::computational_basis(int n, index_t index) {
    StateVector s(n);
    if (index >= s.size()) throw std::invalid_argument("basis index out of range");
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::uniform(int n) {
    StateVector s(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(s.size()));
    std::fill(s.amps_.begin(), s.amps_.end(), complex_t(amp, 0.0));
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

void StateVector::check_normalized(double tol) const {
    if (std::abs(norm_squared() - 1.0) > tol)
        throw std::runtime_error("state norm drifted beyond tolerance");
}

complex_t inner_product(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count())
        throw std::invalid_argument("inner product register mismatch");
    complex_t acc(0.0, 0.0);
    for (index_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

namespace {

// Precomputed traversal for one operator on an n-qubit register: the free
// qubits are enumerated, fixed bit positions (controls + targets) are
// re-inserted, and target offsets index the gathered sub-vector.
struct ApplyPlan {
    index_t ctrl_mask = 0;
    std::array<index_t, 64> target_offset{};
    std::vector<int> fixed_positions;
    index_t free_configs = 1;
    index_t core_dim = 1;
    int k = 0;
};

ApplyPlan make_plan(const LocalOperator& op, int n) {
    if (op.min_register_size() > n)
        throw std::invalid_argument("operator targets exceed the register");
    ApplyPlan plan;
    plan.k = op.target_count();
    plan.core_dim = dim(plan.k);

    for (std::size_t i = 0; i < op.controls().size(); ++i)
        if (op.control_pattern()[i])
            plan.ctrl_mask |= index_t{1} << bit_position(op.controls()[i], n);

    for (index_t j = 0; j < plan.core_dim; ++j)
        for (int i = 0; i < plan.k; ++i)
            if ((j >> (plan.k - 1 - i)) & 1)
                plan.target_offset[j] |= index_t{1} << bit_position(op.targets()[i], n);

    for (int c : op.controls()) plan.fixed_positions.push_back(bit_position(c, n));
    for (int t : op.targets()) plan.fixed_positions.push_back(bit_position(t, n));
    std::sort(plan.fixed_positions.begin(), plan.fixed_positions.end());

    const int f = n - static_cast<int>(plan.fixed_positions.size());
    plan.free_configs = dim(f);
    return plan;
}

inline index_t expand_free(index_t x, const std::vector<int>& fixed_positions) {
    for (int p : fixed_positions) {
        const index_t low = x & ((index_t{1} << p) - 1);
        x = ((x >> p) << (p + 1)) | low;
    }
    return x;
}

}  // namespace

void apply_local_unitary(StateVector& state, const LocalOperator& u) {
    if (!u.is_unitary(1e-9))
        throw std::invalid_argument("apply_local_unitary: core is not unitary");
    const ApplyPlan plan = make_plan(u, state.qubit_count());
    auto& amps = state.amplitudes();
    const Matrix& core = u.core();

    if (plan.k == 0) {
        const complex_t phase = core(0, 0);
        for (index_t x = 0; x < plan.free_configs; ++x)
            amps[expand_free(x, plan.fixed_positions) | plan.ctrl_mask] *= phase;
        return;
    }
    if (u.is_diagonal()) {
        for (index_t x = 0; x < plan.free_configs; ++x) {
            const index_t base = expand_free(x, plan.fixed_positions) | plan.ctrl_mask;
            for (index_t j = 0; j < plan.core_dim; ++j)
                amps[base + plan.target_offset[j]] *=
                    core(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
        }
        return;
    }
    if (plan.k == 1) {
        const complex_t m00 = core(0, 0), m01 = core(0, 1), m10 = core(1, 0), m11 = core(1, 1);
        const index_t stride = plan.target_offset[1];
        for (index_t x = 0; x < plan.free_configs; ++x) {
            const index_t i0 = expand_free(x, plan.fixed_positions) | plan.ctrl_mask;
            const index_t i1 = i0 | stride;
            const complex_t a0 = amps[i0];
            const complex_t a1 = amps[i1];
            amps[i0] = m00 * a0 + m01 * a1;
            amps[i1] = m10 * a0 + m11 * a1;
        }
        return;
    }

    std::array<complex_t, 64> scratch;
    for (index_t x = 0; x < plan.free_configs; ++x) {
        const index_t base = expand_free(x, plan.fixed_positions) | plan.ctrl_mask;
        for (index_t j = 0; j < plan.core_dim; ++j)
            scratch[j] = amps[base + plan.target_offset[j]];
        for (index_t i = 0; i < plan.core_dim; ++i) {
            complex_t acc(0.0, 0.0);
            for (index_t j = 0; j < plan.core_dim; ++j)
                acc += core(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * scratch[j];
            amps[base + plan.target_offset[i]] = acc;
        }
    }
}

void accumulate_term(const StateVector& state, const LocalOperator& op, double coefficient,
                     StateVector& out) {
    if (state.qubit_count() != out.qubit_count())
        throw std::invalid_argument("accumulate_term register mismatch");
    const ApplyPlan plan = make_plan(op, state.qubit_count());
    const auto& amps = state.amplitudes();
    auto& acc_out = out.amplitudes();
    const Matrix& core = op.core();

    if (plan.k == 0) {
        const complex_t scale = coefficient * core(0, 0);
        for (index_t x = 0; x < plan.free_configs; ++x) {
            const index_t i = expand_free(x, plan.fixed_positions) | plan.ctrl_mask;
            acc_out[i] += scale * amps[i];
        }
        return;
    }
    if (op.is_diagonal()) {
        for (index_t x = 0; x < plan.free_configs; ++x) {
            const index_t base = expand_free(x, plan.fixed_positions) | plan.ctrl_mask;
            for (index_t j = 0; j < plan.core_dim; ++j) {
                const index_t i = base + plan.target_offset[j];
                acc_out[i] += coefficient *
                              core(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) *
                              amps[i];
            }
        }
        return;
    }

    std::array<complex_t, 64> scratch;
    for (index_t x = 0; x < plan.free_configs; ++x) {
        const index_t base = expand_free(x, plan.fixed_positions) | plan.ctrl_mask;
        for (index_t j = 0; j < plan.core_dim; ++j)
            scratch[j] = amps[base + plan.target_offset[j]];
        for (index_t i = 0; i < plan.core_dim; ++i) {
            complex_t acc(0.0, 0.0);
            for (index_t j = 0; j < plan.core_dim; ++j)
                acc += core(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * scratch[j];
            acc_out[base + plan.target_offset[i]] += coefficient * acc;
        }
    }
}

StateVector apply_hamiltonian(const StateVector& state, const WeightedTermList& hamiltonian) {
    StateVector out(state.qubit_count());
    for (const auto& t : hamiltonian.terms()) accumulate_term(state, t.op, t.coefficient, out);
    return out;
}

std::pair<double, double> expectation_and_std(const StateVector& state,
                                              const WeightedTermList& hamiltonian) {
    if (hamiltonian.min_register_size() > state.qubit_count())
        throw std::invalid_argument("Hamiltonian does not fit the state register");
    const StateVector phi = apply_hamiltonian(state, hamiltonian);
    const double mean = inner_product(state, phi).real();
    const double second_moment = phi.norm_squared();
    const double variance = std::max(0.0, second_moment - mean * mean);
    return {mean, std::sqrt(variance)};
}

std::vector<double> data_marginal(const StateVector& state, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("data_marginal: empty keep set");
    std::set<int> seen;
    for (int q : keep) {
        if (q < 0 || q >= state.qubit_count())
            throw std::invalid_argument("data_marginal: qubit index out of range");
        if (!seen.insert(q).second)
            throw std::invalid_argument("data_marginal: duplicate qubit index");
    }
    const int k = static_cast<int>(keep.size());
    const int n = state.qubit_count();
    std::vector<double> table(dim(k), 0.0);
    for (index_t i = 0; i < state.size(); ++i) {
        index_t bucket = 0;
        for (int j = 0; j < k; ++j)
            bucket = (bucket << 1) | static_cast<index_t>(get_qubit(i, keep[j], n));
        table[bucket] += std::norm(state[i]);
    }
    return table;
}

std::map<std::string, double> data_marginal_table(const StateVector& state,
                                                  const std::vector<int>& keep) {
    const std::vector<double> table = data_marginal(state, keep);
    std::map<std::string, double> out;
    const int k = static_cast<int>(keep.size());
    for (index_t i = 0; i < table.size(); ++i) out[bitstring(i, k)] = table[i];
    return out;
}

}  // namespace hamclass
