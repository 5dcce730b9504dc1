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

#include "hamclass/color_task.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "hamclass/svg.hpp"

namespace hamclass {

namespace {

const std::vector<std::string> kRed9 = {
    "110000000", "011000000", "100000000", "111001000", "110010001",
    "110001000", "101000001", "111000000", "100000001", "100001000"};

const std::vector<std::string> kBlue9 = {
    "000001100", "001001110", "000000010", "000000110", "001010111",
    "001000110", "001001111", "000000111", "000000011", "000001111"};

const std::vector<std::string> kRed6 = {"110001", "110100", "110000", "100000", "100100"};

// The last blue entry reads |00010> in the source material; five characters
// cannot fill a 6-bit register, so it ships padded to 000100.
const std::vector<std::string> kBlue6 = {"000001", "000011", "001011", "000111", "000100"};

std::string css_color(const std::string& bits, int bits_per_channel) {
    const double full = static_cast<double>(dim(bits_per_channel) - 1);
    std::ostringstream ss;
    ss << "rgb(";
    for (int c = 0; c < 3; ++c) {
        const std::string chunk = bits.substr(static_cast<std::size_t>(c * bits_per_channel),
                                              static_cast<std::size_t>(bits_per_channel));
        ss << static_cast<int>(std::lround(255.0 * static_cast<double>(basis_index(chunk)) / full));
        if (c < 2) ss << ',';
    }
    ss << ')';
    return ss.str();
}

}  // namespace

LabeledDataset color_training_data(int bits) {
    if (bits == 9) return LabeledDataset(kBlue9, kRed9);
    if (bits == 6) {
        std::cerr << "warning: the 6-bit blue training list contains the five-character entry "
                     "|00010>; using 000100 in its place\n";
        return LabeledDataset(kBlue6, kRed6);
    }
    throw std::invalid_argument("color task supports 6 or 9 bits");
}

InteractionGraph color_graph(int bits) {
    if (bits != 6 && bits != 9)
        throw std::invalid_argument("color task supports 6 or 9 bits");
    return InteractionGraph::star(bits, "Proj");
}

ColorTaskResult run_color_task(int bits, const TrainingOptions& options) {
    const InteractionGraph graph = color_graph(bits);
    const LabeledDataset training = color_training_data(bits);

    if (options.mode == LayoutMode::PerTerm) {
        const LayoutCounts counts = count_training_qubits(graph, LayoutMode::PerTerm);
        if (counts.total > options.anneal.qubit_cap)
            throw std::invalid_argument(
                "per-term training of the " + std::to_string(bits) + "-bit task needs " +
                std::to_string(counts.total) +
                " qubits; rerun with --mode qudit (e.g. --group all)");
    }

    TrainingReport report = train_one_shot(graph, training, options);

    std::vector<std::string> spectrum;
    std::vector<std::string> labels;
    for (index_t c = 0; c < dim(bits); ++c) {
        const std::string color = bitstring(c, bits);
        spectrum.push_back(color);
        if (std::find(training.yes().begin(), training.yes().end(), color) != training.yes().end())
            labels.emplace_back("YES");
        else if (std::find(training.no().begin(), training.no().end(), color) !=
                 training.no().end())
            labels.emplace_back("NO");
        else
            labels.emplace_back("");
    }

    std::vector<EvaluationRecord> records = evaluate_dataset(
        report.trained, spectrum, labels, options.anneal, options.schedule, bits / 3);
    BenchmarkMetrics metrics = benchmark_metrics(records, training);

    const auto order = hue_sort(spectrum, bits / 3);
    std::vector<EvaluationRecord> sorted;
    sorted.reserve(records.size());
    for (std::size_t idx : order) sorted.push_back(records[idx]);

    return ColorTaskResult{std::move(report), std::move(sorted), metrics};
}

void write_color_plots(const ColorTaskResult& result, int bits, const std::string& out_dir,
                       const std::string& config_json) {
    const auto& records = result.records;
    const int bpc = bits / 3;
    const std::string prefix = out_dir + "/color" + std::to_string(bits);

    double e_min = records.front().energy_mean, e_max = e_min;
    for (const auto& r : records) {
        e_min = std::min(e_min, r.energy_mean - r.energy_std);
        e_max = std::max(e_max, r.energy_mean + r.energy_std);
    }
    const double pad = 0.05 * (e_max - e_min + 1e-9);
    e_min -= pad;
    e_max += pad;

    // Energy expectations sorted by value.
    {
        std::vector<std::size_t> by_energy(records.size());
        for (std::size_t i = 0; i < records.size(); ++i) by_energy[i] = i;
        std::stable_sort(by_energy.begin(), by_energy.end(), [&](std::size_t a, std::size_t b) {
            return records[a].energy_mean < records[b].energy_mean;
        });
        SvgPlot plot(0, static_cast<double>(records.size()), e_min, e_max);
        plot.add_comment(config_json);
        plot.set_title("Energy expectation, sorted");
        plot.set_labels("color rank", "energy");
        for (std::size_t i = 0; i < by_energy.size(); ++i) {
            const auto& r = records[by_energy[i]];
            plot.vertical_segment(static_cast<double>(i), r.energy_mean - r.energy_std,
                                  r.energy_mean + r.energy_std, "#bbbbbb");
            plot.scatter(static_cast<double>(i), r.energy_mean, css_color(r.bits, bpc));
        }
        plot.save(prefix + "-energy-sorted.svg");
    }

    // Hue order with Gaussian moving average and training bands.
    {
        SvgPlot plot(0, static_cast<double>(records.size()), e_min, e_max);
        plot.add_comment(config_json);
        plot.set_title("Energy expectation by hue");
        plot.set_labels("hue rank", "energy");

        const auto& m = result.metrics;
        plot.horizontal_band(m.yes_energy_mean - m.yes_energy_std,
                             m.yes_energy_mean + m.yes_energy_std, "#3050ff");
        plot.horizontal_band(m.no_energy_mean - m.no_energy_std,
                             m.no_energy_mean + m.no_energy_std, "#ff4030");
        plot.horizontal_line(m.yes_energy_mean, "#3050ff");
        plot.horizontal_line(m.no_energy_mean, "#ff4030");

        std::vector<double> energies;
        for (const auto& r : records) energies.push_back(r.energy_mean);
        const auto smooth = gaussian_moving_average(energies, 3.0);
        std::vector<std::pair<double, double>> line;
        for (std::size_t i = 0; i < smooth.size(); ++i)
            line.emplace_back(static_cast<double>(i), smooth[i]);
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& r = records[i];
            plot.vertical_segment(static_cast<double>(i), r.energy_mean - r.energy_std,
                                  r.energy_mean + r.energy_std, "#cccccc");
            plot.scatter(static_cast<double>(i), r.energy_mean, css_color(r.bits, bpc));
        }
        plot.polyline(line, "black", 2.0);
        plot.save(prefix + "-hue-sorted.svg");
    }

    // Ground-state overlap on a log scale.
    {
        const double floor_p = 1e-12;
        double lo = 0.0;
        std::vector<double> logs;
        for (const auto& r : records) {
            logs.push_back(std::log10(std::max(r.overlap_p, floor_p)));
            lo = std::min(lo, logs.back());
        }
        SvgPlot plot(0, static_cast<double>(records.size()), lo - 0.5, 0.2);
        plot.add_comment(config_json);
        plot.set_title("Ground-state overlap (log scale)");
        plot.set_labels("hue rank", "log10 p");

        double yes_log = 0.0, no_log = 0.0;
        int yes_n = 0, no_n = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (records[i].label == "YES") {
                yes_log += logs[i];
                ++yes_n;
            } else if (records[i].label == "NO") {
                no_log += logs[i];
                ++no_n;
            }
        }
        if (yes_n > 0) plot.horizontal_line(yes_log / yes_n, "#3050ff");
        if (no_n > 0) plot.horizontal_line(no_log / no_n, "#ff4030");

        const auto smooth = gaussian_moving_average(logs, 3.0);
        std::vector<std::pair<double, double>> line;
        for (std::size_t i = 0; i < smooth.size(); ++i)
            line.emplace_back(static_cast<double>(i), smooth[i]);
        for (std::size_t i = 0; i < records.size(); ++i)
            plot.scatter(static_cast<double>(i), logs[i], css_color(records[i].bits, bpc));
        plot.polyline(line, "black", 2.0);
        plot.save(prefix + "-log-overlap.svg");
    }
}

}  // namespace hamclass
