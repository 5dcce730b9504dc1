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

#include "hamclass/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamclass {

void AnnealConfig::validate() const {
    if (steps < 1) throw std::invalid_argument("annealing step count R must be >= 1");
    if (trotter < 1) throw std::invalid_argument("Trotter subdivision n_T must be >= 1");
    if (!(total_time > 0.0)) throw std::invalid_argument("total time tau must be positive");
    if (qubit_cap < 1 || qubit_cap > kQubitCap)
        throw std::invalid_argument("qubit cap outside supported range");
}

namespace {

void validate_curve(const std::vector<SchedulePoint>& curve, const char* name) {
    if (curve.size() < 2) throw std::invalid_argument(std::string(name) + " curve needs >= 2 points");
    if (curve.front().t != 0.0 || curve.back().t != 1.0)
        throw std::invalid_argument(std::string(name) + " curve must span t in [0,1]");
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (curve[i].t < curve[i - 1].t)
            throw std::invalid_argument(std::string(name) + " curve breakpoints out of order");
}

double interpolate(const std::vector<SchedulePoint>& curve, double t) {
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (t <= curve[i].t) {
            const auto& a = curve[i - 1];
            const auto& b = curve[i];
            if (b.t == a.t) return b.s;
            const double w = (t - a.t) / (b.t - a.t);
            return a.s + w * (b.s - a.s);
        }
    }
    return curve.back().s;
}

}  // namespace

AnnealSchedule::AnnealSchedule(std::vector<SchedulePoint> driver, std::vector<SchedulePoint> data,
                               std::vector<SchedulePoint> control)
    : curves_{std::move(driver), std::move(data), std::move(control)} {
    validate_curve(curves_[0], "driver");
    validate_curve(curves_[1], "data");
    validate_curve(curves_[2], "control");
}

AnnealSchedule AnnealSchedule::defaults() {
    return AnnealSchedule({{0.0, 1.0}, {0.125, 1.0}, {1.0, 0.0}},
                          {{0.0, 0.0}, {0.125, 0.25}, {1.0, 1.0}},
                          {{0.0, 0.0}, {0.125, 0.0}, {1.0, 1.0}});
}

std::array<double, 3> AnnealSchedule::strengths(double t) const {
    if (t < 0.0 || t > 1.0)
        throw std::domain_error("schedule time outside [0,1]");
    return {interpolate(curves_[0], t), interpolate(curves_[1], t), interpolate(curves_[2], t)};
}

StateVector initial_state(int n) { return StateVector::uniform(n); }

WeightedTermList driver_hamiltonian(int n) {
    Matrix sigma_x = Matrix::Zero(2, 2);
    sigma_x(0, 1) = 1.0;
    sigma_x(1, 0) = 1.0;
    WeightedTermList driver;
    for (int q = 0; q < n; ++q) driver.add(-1.0, LocalOperator::dense(sigma_x, {q}));
    return driver;
}

StateVector run_anneal(const WeightedTermList& driver, const WeightedTermList& data,
                       const WeightedTermList& control, const AnnealConfig& config,
                       const AnnealSchedule& schedule) {
    config.validate();
    const int n = std::max({driver.min_register_size(), data.min_register_size(),
                            control.min_register_size()});
    if (n < 1) throw std::invalid_argument("run_anneal: all families are empty");
    if (n > config.qubit_cap)
        throw std::invalid_argument("run_anneal: register of " + std::to_string(n) +
                                    " qubits exceeds the cap");

    const std::array<const WeightedTermList*, 3> families{&driver, &data, &control};
    StateVector psi = initial_state(n);
    const double dt_sub = config.total_time / config.steps / config.trotter;

    std::vector<LocalOperator> gates;
    for (int r = 1; r <= config.steps; ++r) {
        const double t = static_cast<double>(r) / config.steps;
        const auto strengths = schedule.strengths(t);

        gates.clear();
        for (int f = 0; f < 3; ++f) {
            if (strengths[f] == 0.0) continue;
            for (const auto& term : families[f]->terms()) {
                const double theta = term.coefficient * strengths[f] * dt_sub;
                if (theta == 0.0) continue;
                gates.push_back(matrix_exp_hermitian(term.op, theta));
            }
        }
        for (int rep = 0; rep < config.trotter; ++rep)
            for (const auto& gate : gates) apply_local_unitary(psi, gate);
    }
    return psi;
}

ControlStatistics control_statistics(const StateVector& state, const TrainingLayout& layout) {
    if (layout.total_qubits() > state.qubit_count())
        throw std::invalid_argument("layout does not fit the state register");

    ControlStatistics stats;
    const std::vector<int> controls = layout.control_qubits();
    stats.control_one_prob.reserve(controls.size());
    for (int c : controls) {
        const auto table = data_marginal(state, {c});
        stats.control_one_prob.push_back(table[1]);
    }

    stats.instance_activation.assign(static_cast<std::size_t>(layout.instance_count()), 0.0);
    for (int g = 0; g < static_cast<int>(layout.groups().size()); ++g) {
        const auto& group = layout.groups()[static_cast<std::size_t>(g)];
        const auto block_prob = data_marginal(state, group.control_qubits);
        for (int inst : group.instance_indices)
            for (index_t v = 0; v < block_prob.size(); ++v)
                if (layout.pattern_activates(g, v, inst))
                    stats.instance_activation[static_cast<std::size_t>(inst)] += block_prob[v];
        stats.group_block_prob.push_back(block_prob);
    }
    return stats;
}

AnnealResult run_training_anneal(const InteractionGraph& graph, const TrainingLayout& layout,
                                 const WeightedTermList& driver, const WeightedTermList& data,
                                 const WeightedTermList& control, const AnnealConfig& config,
                                 const AnnealSchedule& schedule) {
    StateVector state = run_anneal(driver, data, control, config, schedule);
    ControlStatistics stats = control_statistics(state, layout);
    std::vector<double> data_dist = data_marginal(state, graph.data_vertices());
    return AnnealResult{std::move(state), std::move(stats), std::move(data_dist)};
}

}  // namespace hamclass
