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

#include "hamclass/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hamclass {

StateVector anneal_trained(const TrainedClassifier& trained, const AnnealConfig& config,
                           const AnnealSchedule& schedule) {
    const int n = trained.graph().vertex_count();
    const WeightedTermList driver = driver_hamiltonian(n);
    const WeightedTermList target = assemble_hamiltonian(trained);
    return run_anneal(driver, WeightedTermList{}, target, config, schedule);
}

namespace {

EvaluationRecord make_record(const TrainedClassifier& trained, const WeightedTermList& hamiltonian,
                             const std::vector<double>& overlap_table, const std::string& datum) {
    EvaluationRecord record;
    record.bits = datum;
    const auto [mean, std_dev] = expectation_and_std(datum_state(trained.graph(), datum),
                                                     hamiltonian);
    record.energy_mean = mean;
    record.energy_std = std_dev;
    record.overlap_p = overlap_table[basis_index(datum)];
    return record;
}

}  // namespace

EvaluationRecord evaluate_datum(const TrainedClassifier& trained, const std::string& datum,
                                const AnnealConfig& config, const AnnealSchedule& schedule) {
    const StateVector ground = anneal_trained(trained, config, schedule);
    const std::vector<double> overlap = data_marginal(ground, trained.graph().data_vertices());
    return make_record(trained, assemble_hamiltonian(trained), overlap, datum);
}

std::vector<EvaluationRecord> evaluate_dataset(const TrainedClassifier& trained,
                                               const std::vector<std::string>& data,
                                               const std::vector<std::string>& labels,
                                               const AnnealConfig& config,
                                               const AnnealSchedule& schedule,
                                               int hue_bits_per_channel) {
    if (!labels.empty() && labels.size() != data.size())
        throw std::invalid_argument("label list does not match the data list");
    const StateVector ground = anneal_trained(trained, config, schedule);
    const std::vector<double> overlap = data_marginal(ground, trained.graph().data_vertices());
    const WeightedTermList hamiltonian = assemble_hamiltonian(trained);

    std::vector<EvaluationRecord> records;
    records.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        EvaluationRecord record = make_record(trained, hamiltonian, overlap, data[i]);
        if (!labels.empty()) record.label = labels[i];
        if (hue_bits_per_channel > 0) record.hue = rgb_hue(data[i], hue_bits_per_channel);
        records.push_back(std::move(record));
    }
    return records;
}

BenchmarkMetrics benchmark_metrics(std::vector<EvaluationRecord>& records,
                                   const LabeledDataset& training) {
    if (training.yes().empty() || training.no().empty())
        throw std::invalid_argument("fidelity is undefined for one-sided training data");

    const std::set<std::string> yes_set(training.yes().begin(), training.yes().end());
    const std::set<std::string> no_set(training.no().begin(), training.no().end());

    BenchmarkMetrics metrics;
    std::vector<double> yes_e, no_e;
    double yes_p = 0.0, no_p = 0.0;
    int yes_n = 0, no_n = 0;
    for (const auto& record : records) {
        if (yes_set.count(record.bits)) {
            yes_p += record.overlap_p;
            yes_e.push_back(record.energy_mean);
            ++yes_n;
        } else if (no_set.count(record.bits)) {
            no_p += record.overlap_p;
            no_e.push_back(record.energy_mean);
            ++no_n;
        }
    }
    if (yes_n == 0 || no_n == 0)
        throw std::invalid_argument("records do not cover both training sides");

    metrics.yes_overlap_mean = yes_p / yes_n;
    metrics.no_overlap_mean = no_p / no_n;
    metrics.threshold = 0.5 * (metrics.yes_overlap_mean + metrics.no_overlap_mean);
    metrics.yes_above_threshold = metrics.yes_overlap_mean >= metrics.no_overlap_mean;

    auto mean_std = [](const std::vector<double>& xs, double& mean, double& sd) {
        mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        sd = std::sqrt(var / static_cast<double>(xs.size()));
    };
    mean_std(yes_e, metrics.yes_energy_mean, metrics.yes_energy_std);
    mean_std(no_e, metrics.no_energy_mean, metrics.no_energy_std);
    metrics.delta_e = std::abs(metrics.no_energy_mean - metrics.yes_energy_mean);

    int labelled = 0, correct = 0;
    for (auto& record : records) {
        const bool above = record.overlap_p >= metrics.threshold;
        const bool as_yes = above == metrics.yes_above_threshold;
        record.predicted = as_yes ? "YES" : "NO";
        if (record.label.empty()) continue;
        ++labelled;
        if (record.predicted == record.label) ++correct;
    }
    metrics.fidelity_pct =
        labelled > 0 ? 100.0 * static_cast<double>(correct) / static_cast<double>(labelled) : 0.0;
    return metrics;
}

std::vector<double> gaussian_moving_average(const std::vector<double>& series, double sigma) {
    if (series.empty()) throw std::invalid_argument("cannot smooth an empty series");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");

    const int half_width = std::max(1, static_cast<int>(std::floor(4.0 * sigma)));
    std::vector<double> kernel(static_cast<std::size_t>(2 * half_width + 1));
    double mass = 0.0;
    for (int j = -half_width; j <= half_width; ++j) {
        const double w = std::exp(-0.5 * (j / sigma) * (j / sigma));
        kernel[static_cast<std::size_t>(j + half_width)] = w;
        mass += w;
    }
    for (auto& w : kernel) w /= mass;

    const int n = static_cast<int>(series.size());
    auto reflect = [n](int i) {
        while (i < 0 || i >= n) {
            if (i < 0) i = -i - 1;
            if (i >= n) i = 2 * n - 1 - i;
        }
        return i;
    };

    std::vector<double> out(series.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = -half_width; j <= half_width; ++j)
            acc += kernel[static_cast<std::size_t>(j + half_width)] * series[static_cast<std::size_t>(reflect(i + j))];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

double rgb_hue(const std::string& bits, int bits_per_channel) {
    if (bits_per_channel < 1 || static_cast<int>(bits.size()) != 3 * bits_per_channel)
        throw std::invalid_argument("color bitstring must hold three equal channels");
    const double full = static_cast<double>(dim(bits_per_channel) - 1);
    const auto channel = [&](int c) {
        const std::string chunk = bits.substr(static_cast<std::size_t>(c * bits_per_channel),
                                              static_cast<std::size_t>(bits_per_channel));
        return static_cast<double>(basis_index(chunk)) / full;
    };
    const double r = channel(0), g = channel(1), b = channel(2);
    const double hi = std::max({r, g, b});
    const double lo = std::min({r, g, b});
    const double chroma = hi - lo;
    if (chroma <= 0.0) return 0.0;
    double hue;
    if (hi == r)
        hue = std::fmod((g - b) / chroma + 6.0, 6.0);
    else if (hi == g)
        hue = (b - r) / chroma + 2.0;
    else
        hue = (r - g) / chroma + 4.0;
    return 60.0 * hue;
}

std::vector<std::size_t> hue_sort(const std::vector<std::string>& colors, int bits_per_channel) {
    std::vector<std::size_t> order(colors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ha = rgb_hue(colors[a], bits_per_channel);
        const double hb = rgb_hue(colors[b], bits_per_channel);
        if (ha != hb) return ha < hb;
        return basis_index(colors[a]) < basis_index(colors[b]);
    });
    return order;
}

void write_records_csv(const std::string& path, const std::vector<EvaluationRecord>& records,
                       const std::string& config_json) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    out.precision(12);
    if (!config_json.empty()) {
        std::istringstream config(config_json);
        std::string line;
        while (std::getline(config, line)) out << "# " << line << "\n";
    }
    out << "bitstring,hue,energy_mean,energy_std,overlap_p,label,predicted\n";
    for (const auto& r : records)
        out << r.bits << ',' << r.hue << ',' << r.energy_mean << ',' << r.energy_std << ','
            << r.overlap_p << ',' << r.label << ',' << r.predicted << "\n";
}

}  // namespace hamclass
