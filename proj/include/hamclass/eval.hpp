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
#include <vector>

#include "hamclass/train.hpp"

namespace hamclass {

struct EvaluationRecord {
    std::string bits;
    double hue = 0.0;
    double energy_mean = 0.0;
    double energy_std = 0.0;
    double overlap_p = 0.0;
    std::string label;      // "YES", "NO", or empty for unlabelled test data
    std::string predicted;  // filled by benchmark_metrics
};

/// Anneals the trained Hamiltonian alone (driver and control schedules, no
/// data family) and returns the final state over the graph register. The
/// data-register marginal of this state is the overlap distribution shared
/// by every evaluated datum.
StateVector anneal_trained(const TrainedClassifier& trained, const AnnealConfig& config,
                           const AnnealSchedule& schedule);

/// Energy expectation on |datum> (x) uniform hidden register, plus the
/// overlap entry of the annealed ground-state candidate at the datum.
EvaluationRecord evaluate_datum(const TrainedClassifier& trained, const std::string& datum,
                                const AnnealConfig& config, const AnnealSchedule& schedule);

/// Shared-anneal evaluation of many data strings; labels are optional and
/// matched by position ("" for unlabelled).
std::vector<EvaluationRecord> evaluate_dataset(const TrainedClassifier& trained,
                                               const std::vector<std::string>& data,
                                               const std::vector<std::string>& labels,
                                               const AnnealConfig& config,
                                               const AnnealSchedule& schedule,
                                               int hue_bits_per_channel = 0);

struct BenchmarkMetrics {
    double fidelity_pct = 0.0;  // labelled records on the correct side
    double delta_e = 0.0;       // |mean_E(NO) - mean_E(YES)| on training data
    double yes_overlap_mean = 0.0, no_overlap_mean = 0.0;
    double yes_energy_mean = 0.0, no_energy_mean = 0.0;
    double yes_energy_std = 0.0, no_energy_std = 0.0;
    double threshold = 0.0;  // midpoint of the training overlap means
    bool yes_above_threshold = true;
};

/// Midpoint-threshold classification of the records against the training
/// sides; fills each record's `predicted` field. Throws if the training
/// data is one-sided.
BenchmarkMetrics benchmark_metrics(std::vector<EvaluationRecord>& records,
                                   const LabeledDataset& training);

/// Discrete Gaussian smoothing: kernel truncated at 4*sigma, normalized to
/// unit mass, reflected at the series boundaries.
std::vector<double> gaussian_moving_average(const std::vector<double>& series, double sigma = 3.0);

/// Hue in degrees [0, 360) of a bitstring holding three k-bit channels in
/// R,G,B order (most significant bit first within each channel), by the
/// hexagonal hue formula. Gray values report hue 0.
double rgb_hue(const std::string& bits, int bits_per_channel);

/// Permutation sorting colors by hue, ties broken by raw integer value.
std::vector<std::size_t> hue_sort(const std::vector<std::string>& colors, int bits_per_channel);

/// CSV emission, one row per record:
/// bitstring,hue,energy_mean,energy_std,overlap_p,label,predicted.
/// `config_json` is embedded as a comment header for reproducibility.
void write_records_csv(const std::string& path, const std::vector<EvaluationRecord>& records,
                       const std::string& config_json);

}  // namespace hamclass
