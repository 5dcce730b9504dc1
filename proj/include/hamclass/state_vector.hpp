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

#include <map>
#include <string>
#include <vector>

#include "hamclass/local_operator.hpp"
#include "hamclass/numeric.hpp"

namespace hamclass {

/// Dense complex amplitudes of an n-qubit register, n <= kQubitCap.
class StateVector {
  public:
    explicit StateVector(int n);

    /// |bits> for a full-register bitstring literal.
    static StateVector computational_basis(int n, const std::string& bits);
    static StateVector computational_basis(int n, index_t index);
    /// Uniform superposition 2^{-n/2} sum_s |s>.
    static StateVector uniform(int n);

    int qubit_count() const { return n_; }
    index_t size() const { return static_cast<index_t>(amps_.size()); }

    complex_t& operator[](index_t i) { return amps_[i]; }
    const complex_t& operator[](index_t i) const { return amps_[i]; }
    std::vector<complex_t>& amplitudes() { return amps_; }
    const std::vector<complex_t>& amplitudes() const { return amps_; }

    double norm_squared() const;
    /// Throws if the squared norm deviates from one by more than tol.
    void check_normalized(double tol = tolerances().norm) const;

  private:
    int n_;
    std::vector<complex_t> amps_;
};

complex_t inner_product(const StateVector& a, const StateVector& b);

/// Applies the (possibly controlled) unitary in place. Off-pattern
/// amplitudes are untouched: exactly a controlled-u gate.
void apply_local_unitary(StateVector& state, const LocalOperator& u);

/// out += coefficient * (op applied with Hamiltonian-term semantics, i.e.
/// zero off-pattern). Used to accumulate H|psi> term by term.
void accumulate_term(const StateVector& state, const LocalOperator& op, double coefficient,
                     StateVector& out);

/// H|psi> accumulated from local applications.
StateVector apply_hamiltonian(const StateVector& state, const WeightedTermList& hamiltonian);

/// mean = <psi|H|psi>, std = sqrt(<phi|phi> - mean^2) with phi = H|psi>,
/// clamped at zero.
std::pair<double, double> expectation_and_std(const StateVector& state,
                                              const WeightedTermList& hamiltonian);

/// Probability table over the kept qubits: entry [bits over `keep`, in the
/// order given] = sum over discarded configurations of |amplitude|^2.
std::vector<double> data_marginal(const StateVector& state, const std::vector<int>& keep);

/// Same table keyed by bitstring, for reporting.
std::map<std::string, double> data_marginal_table(const StateVector& state,
                                                  const std::vector<int>& keep);

}  // namespace hamclass
