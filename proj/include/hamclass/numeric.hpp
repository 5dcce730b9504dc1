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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamclass {

using complex_t = std::complex<double>;
using index_t = std::uint64_t;

/// Library-wide numerical tolerances, kept in one place so tests and
/// implementations agree on what "equal" means.
struct Tolerances {
    double norm = 1e-9;        // squared-amplitude sum deviation per state
    double unitarity = 1e-10;  // max-norm of u u^dag - 1
    double hermiticity = 1e-12;
    double probability = 1e-9;     // marginal tables summing to one
    double degeneracy = 1e-7;      // relative ground-space window (oracle)
    double coefficient_tie = 1e-12;  // |kappa| below this counts as zero (LP)
};

inline const Tolerances& tolerances() {
    static const Tolerances tol{};
    return tol;
}

/// Hard cap on register sizes handled by the state-vector engine.
inline constexpr int kQubitCap = 24;

/// Dense matrices are materialized for local operators of at most this
/// many target qubits.
inline constexpr int kMaxDenseTargets = 6;

/// Exact-diagonalization routines refuse registers above this size.
inline constexpr int kOracleQubitCap = 14;

// ---------------------------------------------------------------------------
// Bit conventions.
//
// Qubit 0 is the leftmost character of a bitstring literal. For an n-qubit
// register, qubit q therefore occupies bit position (n-1-q) of the basis
// index, so |"10"> on two qubits is index 2, not 1.
// ---------------------------------------------------------------------------

inline int bit_position(int qubit, int n) { return n - 1 - qubit; }

inline bool get_qubit(index_t index, int qubit, int n) {
    return (index >> bit_position(qubit, n)) & 1u;
}

inline index_t set_qubit(index_t index, int qubit, int n, bool value) {
    const index_t mask = index_t{1} << bit_position(qubit, n);
    return value ? (index | mask) : (index & ~mask);
}

/// Basis index of a bitstring literal such as "0110".
inline index_t basis_index(const std::string& bits) {
    if (bits.size() > 63) throw std::invalid_argument("bitstring too long");
    index_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring contains non-binary character: " + bits);
        idx = (idx << 1) | static_cast<index_t>(c == '1');
    }
    return idx;
}

/// Inverse of basis_index for an n-qubit register.
inline std::string bitstring(index_t index, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q)
        if (get_qubit(index, q, n)) s[static_cast<std::size_t>(q)] = '1';
    return s;
}

inline index_t dim(int n) { return index_t{1} << n; }

}  // namespace hamclass
