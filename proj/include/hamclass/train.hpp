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

#include <string>
#include <utility>
#include <vector>

#include "hamclass/anneal.hpp"
#include "hamclass/layout.hpp"
#include "hamclass/model.hpp"

namespace hamclass {

struct TrainingOptions {
    LayoutMode mode = LayoutMode::PerTerm;
    GroupingRule grouping{};
    std::pair<double, double> weight_range{-1.0, 1.0};
    AnnealConfig anneal{};
    AnnealSchedule schedule = AnnealSchedule::defaults();
    double delta = 1.0;
    int workers = 2;  // concurrent per-datum anneals in serial training
};

/// Everything a training run produced: the classifier plus the raw
/// quantities the weights were derived from.
struct TrainingReport {
    TrainingReport(TrainedClassifier trained_classifier, std::string method_name)
        : trained(std::move(trained_classifier)), method(std::move(method_name)) {}

    TrainedClassifier trained;
    std::string method;

    // One-shot: control marginals per term instance, raw and min-max
    // normalized to [0,1].
    std::vector<double> yes_marginals, no_marginals;
    std::vector<double> yes_shifted, no_shifted;
    // Serial: M_l per datum (instance indices), YES data first then NO.
    std::vector<std::vector<int>> per_datum_sets;
    // Exact LP: objective coefficient kappa per instance.
    std::vector<double> lp_coefficients;
    // Projected oracle: diagonal of the system partial trace, indexed by the
    // joint control-register pattern.
    std::vector<double> traced_diagonal;

    bool sign_flipped = false;
    double yes_mean_energy = 0.0;
    double no_mean_energy = 0.0;
    int training_qubits = 0;  // graph vertices + control register
    TrainingOptions options;

    std::string to_json_string() const;
    void save(const std::string& path) const;
};

/// Reloads a saved report: graph, weights and metadata round-trip through
/// the JSON file.
TrainingReport load_report(const std::string& path);

/// Two anneals (YES projector, then NO), weights from the difference of the
/// min-max-normalized control marginals, re-shifted into the weight range,
/// with sign auto-calibration against the training energies.
TrainingReport train_one_shot(const InteractionGraph& graph, const LabeledDataset& dataset,
                              const TrainingOptions& options = {});

/// One anneal per datum with a rank-one data projector; weights are the
/// normalized YES-count minus NO-count of each term's block membership.
TrainingReport train_serial(const InteractionGraph& graph, const LabeledDataset& dataset,
                            const TrainingOptions& options = {});

/// Exact optimum of the energy-expectation objective over the weight box,
/// solved coordinate-wise (the objective is separable and linear).
TrainingReport train_exact_lp(const InteractionGraph& graph, const LabeledDataset& dataset,
                              const TrainingOptions& options = {});

/// Dense reference for the projected training Hamiltonian (1 (x) Pi) H_c
/// (1 (x) Pi): traces out the system, keeps every term appearing in a
/// minimal control block. Register limited to kOracleQubitCap qubits.
TrainingReport train_projected_oracle(const InteractionGraph& graph, const LabeledDataset& dataset,
                                      const TrainingOptions& options = {});

/// Min-max normalization of control marginals to [0,1]; an all-equal vector
/// normalizes to zeros (that side then contributes nothing).
std::vector<double> normalize_marginals(const std::vector<double>& values);

/// Product state |datum> on the data register, uniform superposition on
/// hidden vertices: the deterministic test-state policy.
StateVector datum_state(const InteractionGraph& graph, const std::string& datum);

/// <datum, uniform hidden| H |datum, uniform hidden>.
double datum_energy(const WeightedTermList& hamiltonian, const InteractionGraph& graph,
                    const std::string& datum);

/// Mean datum_energy over a list of strings.
double mean_energy(const WeightedTermList& hamiltonian, const InteractionGraph& graph,
                   const std::vector<std::string>& data);

}  // namespace hamclass
