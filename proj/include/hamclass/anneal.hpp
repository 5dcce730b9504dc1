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

#include <array>
#include <vector>

#include "hamclass/layout.hpp"
#include "hamclass/state_vector.hpp"

namespace hamclass {

/// Annealing meta-parameters. Evolution is deterministic: identical inputs
/// give bit-identical results.
struct AnnealConfig {
    int steps = 100;        // R, annealing interval subdivisions
    int trotter = 30;       // n_T, Trotter subdivisions per step
    double total_time = 20.0;  // tau, in units of inverse coupling strength
    int qubit_cap = kQubitCap;

    void validate() const;
};

struct SchedulePoint {
    double t = 0.0;
    double s = 0.0;
};

/// Piecewise-linear strength curves for the three Hamiltonian families on
/// t in [0,1]. The default keeps the driver at full strength within the
/// first eighth, ramps the data projector to a quarter there, and only then
/// switches the control Hamiltonian on.
class AnnealSchedule {
  public:
    AnnealSchedule(std::vector<SchedulePoint> driver, std::vector<SchedulePoint> data,
                   std::vector<SchedulePoint> control);

    static AnnealSchedule defaults();

    /// (s_driver, s_data, s_control) at normalized time t in [0,1].
    std::array<double, 3> strengths(double t) const;

    const std::vector<SchedulePoint>& driver_curve() const { return curves_[0]; }
    const std::vector<SchedulePoint>& data_curve() const { return curves_[1]; }
    const std::vector<SchedulePoint>& control_curve() const { return curves_[2]; }

  private:
    std::array<std::vector<SchedulePoint>, 3> curves_;
};

/// Uniform superposition, the ground state of the trivial initial
/// Hamiltonian -sum_i sigma_x^(i).
StateVector initial_state(int n);

/// -sigma_x on every qubit of an n-qubit register.
WeightedTermList driver_hamiltonian(int n);

/// Trotterized adiabatic evolution from the uniform superposition. Each of
/// the R steps at t_r = r/R applies the first-order product of all family
/// terms scaled by their schedule strengths for a duration tau/R with n_T
/// subdivisions; term order is driver, data, control, each in index order.
/// Families enter H(t) exactly as passed, so trainers hand in the data
/// projector already scaled by -delta.
StateVector run_anneal(const WeightedTermList& driver, const WeightedTermList& data,
                       const WeightedTermList& control, const AnnealConfig& config,
                       const AnnealSchedule& schedule);

struct ControlStatistics {
    /// P(|1>) per control qubit, ascending qubit order.
    std::vector<double> control_one_prob;
    /// Per group, the marginal over that group's control register.
    std::vector<std::vector<double>> group_block_prob;
    /// Per term instance, the probability that its activation pattern is
    /// observed: the control marginal in per-term mode, the block
    /// probability in qudit mode.
    std::vector<double> instance_activation;
};

ControlStatistics control_statistics(const StateVector& state, const TrainingLayout& layout);

struct AnnealResult {
    StateVector final_state;
    ControlStatistics controls;
    std::vector<double> data_distribution;
};

/// Anneal plus control and data-register statistics in one call.
AnnealResult run_training_anneal(const InteractionGraph& graph, const TrainingLayout& layout,
                                 const WeightedTermList& driver, const WeightedTermList& data,
                                 const WeightedTermList& control, const AnnealConfig& config,
                                 const AnnealSchedule& schedule);

}  // namespace hamclass
