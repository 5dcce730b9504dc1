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

#include "hamclass/eval.hpp"

namespace hamclass {

/// Embedded red-vs-blue training colors for the 6- and 9-bit tasks; blue is
/// the YES side. The 6-bit blue list contains one five-character entry in
/// the source material, normalized here to 000100 (a warning is printed
/// whenever the 6-bit set is built).
LabeledDataset color_training_data(int bits);

/// Star interaction graph for the color tasks: one data leaf per input bit,
/// a single hidden center vertex, diagonal projector couplings.
InteractionGraph color_graph(int bits);

struct ColorTaskResult {
    TrainingReport report;
    std::vector<EvaluationRecord> records;  // hue-sorted over the full spectrum
    BenchmarkMetrics metrics;
};

/// Trains on the embedded data and evaluates every color of the spectrum.
/// The 9-bit task requires qudit grouping to fit the qubit cap; per-term
/// mode is refused with guidance.
ColorTaskResult run_color_task(int bits, const TrainingOptions& options);

/// Writes the three result figures: energy-sorted curve, hue-sorted curve
/// with moving average and training bands, log-overlap scatter.
void write_color_plots(const ColorTaskResult& result, int bits, const std::string& out_dir,
                       const std::string& config_json);

}  // namespace hamclass
