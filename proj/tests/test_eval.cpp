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

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "hamclass/eval.hpp"
#include "test_helpers.hpp"

using namespace hamclass;
using namespace hamclass::testing;

namespace {

LabeledDataset not_task() { return LabeledDataset({"01", "10"}, {"00", "11"}); }

TrainedClassifier target_classifier() {
    TrainedClassifier classifier(InteractionGraph::preset("edge", "Proj"), {0.0, 1.0});
    classifier.set_coefficients({1.0, 0.0, 0.0, 1.0});
    return classifier;
}

AnnealConfig quick_config() {
    AnnealConfig c;
    c.steps = 60;
    c.trotter = 30;
    return c;
}

std::vector<EvaluationRecord> labelled_records(const std::vector<double>& yes_p,
                                               const std::vector<double>& no_p) {
    std::vector<EvaluationRecord> records;
    int i = 0;
    for (double p : yes_p) {
        EvaluationRecord r;
        r.bits = "0" + bitstring(static_cast<index_t>(i++), 2);
        r.label = "YES";
        r.overlap_p = p;
        records.push_back(r);
    }
    i = 0;
    for (double p : no_p) {
        EvaluationRecord r;
        r.bits = "1" + bitstring(static_cast<index_t>(i++), 2);
        r.label = "NO";
        r.overlap_p = p;
        records.push_back(r);
    }
    return records;
}

LabeledDataset labelled_records_dataset() {
    return LabeledDataset({"000", "001", "010", "011"}, {"100", "101", "110", "111"});
}

}  // namespace

TEST_SUITE_BEGIN("eval");

TEST_CASE("the target Hamiltonian gives YES data zero energy and strong overlap") {
    const auto record = evaluate_datum(target_classifier(), "01", quick_config(),
                                       AnnealSchedule::defaults());
    CHECK(record.energy_mean == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(record.overlap_p >= 0.45);

    const auto wrong = evaluate_datum(target_classifier(), "00", quick_config(),
                                      AnnealSchedule::defaults());
    CHECK(wrong.energy_mean == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(wrong.overlap_p <= 0.05);
}

TEST_CASE("evaluation energy is linear in the trained coefficients") {
    TrainedClassifier half(InteractionGraph::preset("edge", "Proj"));
    half.set_coefficients({0.5, -0.25, 0.25, -0.5});
    TrainedClassifier full(InteractionGraph::preset("edge", "Proj"));
    full.set_coefficients({1.0, -0.5, 0.5, -1.0});
    for (const auto* datum : {"00", "01", "10", "11"}) {
        const double e_half = datum_energy(assemble_hamiltonian(half), half.graph(), datum);
        const double e_full = datum_energy(assemble_hamiltonian(full), full.graph(), datum);
        CHECK(e_full == doctest::Approx(2.0 * e_half).epsilon(1e-12));
    }
}

TEST_CASE("a datum of the wrong length is rejected") {
    CHECK_THROWS_AS(evaluate_datum(target_classifier(), "011", quick_config(),
                                   AnnealSchedule::defaults()),
                    std::invalid_argument);
}

TEST_CASE("overlap values over the full data register form one distribution") {
    std::vector<std::string> all;
    for (index_t i = 0; i < 4; ++i) all.push_back(bitstring(i, 2));
    const auto records = evaluate_dataset(target_classifier(), all, {}, quick_config(),
                                          AnnealSchedule::defaults());
    double sum = 0.0;
    for (const auto& r : records) sum += r.overlap_p;
    CHECK(std::abs(sum - 1.0) <= 1e-6);
}

TEST_CASE("perfectly separated overlaps classify at fidelity 100") {
    auto records = labelled_records({0.9, 0.8, 0.95, 0.85}, {0.05, 0.1, 0.02, 0.08});
    const auto metrics = benchmark_metrics(records, labelled_records_dataset());
    CHECK(metrics.fidelity_pct == doctest::Approx(100.0));
    for (const auto& r : records)
        CHECK(r.predicted == r.label);
}

TEST_CASE("three of eight misclassified records give fidelity 62.5") {
    auto records = labelled_records({0.9, 0.9, 0.3, 0.3}, {0.1, 0.1, 0.1, 0.7});
    const auto metrics = benchmark_metrics(records, labelled_records_dataset());
    CHECK(metrics.fidelity_pct == doctest::Approx(62.5));
}

TEST_CASE("fidelity is invariant under monotone rescaling of overlaps") {
    auto records = labelled_records({0.9, 0.6, 0.3, 0.55}, {0.1, 0.4, 0.45, 0.2});
    const auto before = benchmark_metrics(records, labelled_records_dataset());
    for (auto& r : records) r.overlap_p = 2.0 * r.overlap_p + 1.0;
    const auto after = benchmark_metrics(records, labelled_records_dataset());
    CHECK(before.fidelity_pct == doctest::Approx(after.fidelity_pct));
}

TEST_CASE("one-sided training data leaves fidelity undefined") {
    auto records = labelled_records({0.9}, {0.1});
    CHECK_THROWS_AS(benchmark_metrics(records, LabeledDataset({"000"}, {})),
                    std::invalid_argument);
}

TEST_CASE("the trained NOT classifier reproduces the reference row f=100, dE=2") {
    TrainingOptions options;  // default weight range [-1,1]
    options.anneal.steps = 100;
    options.anneal.trotter = 50;
    const auto report = train_one_shot(InteractionGraph::preset("edge", "Proj"), not_task(),
                                       options);
    std::vector<std::string> all;
    std::vector<std::string> labels;
    for (index_t i = 0; i < 4; ++i) {
        all.push_back(bitstring(i, 2));
        labels.push_back(all.back() == "01" || all.back() == "10" ? "YES" : "NO");
    }
    auto records = evaluate_dataset(report.trained, all, labels, options.anneal,
                                    options.schedule);
    const auto metrics = benchmark_metrics(records, not_task());
    CHECK(metrics.fidelity_pct == doctest::Approx(100.0));
    CHECK(metrics.delta_e == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("gaussian smoothing preserves constants and unit mass") {
    const std::vector<double> constant(40, 2.5);
    for (double v : gaussian_moving_average(constant, 3.0))
        CHECK(v == doctest::Approx(2.5).epsilon(1e-12));

    std::vector<double> impulse(41, 0.0);
    impulse[20] = 1.0;
    const auto smoothed = gaussian_moving_average(impulse, 3.0);
    double mass = 0.0;
    for (double v : smoothed) mass += v;
    CHECK(std::abs(mass - 1.0) <= 1e-9);
    // Kernel shape: symmetric around the impulse and peaked there.
    CHECK(smoothed[20] > smoothed[19]);
    CHECK(smoothed[19] == doctest::Approx(smoothed[21]).epsilon(1e-12));
    CHECK(smoothed[15] == doctest::Approx(smoothed[25]).epsilon(1e-12));

    CHECK_THROWS_AS(gaussian_moving_average({}, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_moving_average({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("hue lands on the color wheel corners") {
    CHECK(rgb_hue("100" "000" "000", 3) == doctest::Approx(0.0));
    CHECK(rgb_hue("000" "000" "001", 3) == doctest::Approx(240.0));
    CHECK(rgb_hue("000" "111" "000", 3) == doctest::Approx(120.0));
    CHECK(rgb_hue("11" "00" "00", 2) == doctest::Approx(0.0));
    CHECK(rgb_hue("000" "000" "000", 3) == doctest::Approx(0.0));  // gray
    CHECK_THROWS_AS(rgb_hue("0000", 3), std::invalid_argument);
}

TEST_CASE("hue sort orders by hue with raw-value tie breaks") {
    const std::vector<std::string> colors{"000000001",   // blue, 240
                                          "100000000",   // red, 0
                                          "010000000",   // darker red, 0 (tie)
                                          "000100000"};  // green, 120
    const auto order = hue_sort(colors, 3);
    // Ties at hue 0: raw integer of 010000000 < 100000000.
    CHECK(order == std::vector<std::size_t>{2, 1, 3, 0});
}

TEST_CASE("CSV output embeds the config and reproduces byte-identically") {
    auto records = labelled_records({0.75}, {0.25});
    records[0].hue = 12.5;
    records[0].energy_mean = -1.25;
    records[0].energy_std = 0.5;
    const std::string path = "/tmp/hamclass_eval_test.csv";
    write_records_csv(path, records, "{\"run\":1}");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# {\"run\":1}");
    std::getline(in, line);
    CHECK(line == "bitstring,hue,energy_mean,energy_std,overlap_p,label,predicted");
    std::getline(in, line);
    CHECK(line == "000,12.5,-1.25,0.5,0.75,YES,");
    in.close();

    auto slurp = [&]() {
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string first = slurp();
    write_records_csv(path, records, "{\"run\":1}");
    CHECK(first == slurp());
}

TEST_SUITE_END();
