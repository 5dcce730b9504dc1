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

#include "hamclass/train.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <stdexcept>

#include <json.hpp>

#include "hamclass/oracle.hpp"

namespace hamclass {

namespace {

using nlohmann::json;

void require_both_sides(const LabeledDataset& dataset) {
    if (dataset.yes().empty() || dataset.no().empty())
        throw std::invalid_argument("training requires YES and NO data");
}

/// Affine map of raw weights in [-1,1] onto the configured range.
std::vector<double> shift_into_range(const std::vector<double>& raw,
                                     std::pair<double, double> range) {
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double w = range.first + (raw[i] + 1.0) * 0.5 * (range.second - range.first);
        out[i] = std::clamp(w, range.first, range.second);
    }
    return out;
}

/// If the trained Hamiltonian gives YES data a higher mean energy than NO
/// data, all raw weights are negated and re-shifted. Returns the flag.
bool calibrate_sign(const InteractionGraph& graph, const LabeledDataset& dataset,
                    std::vector<double>& raw, std::pair<double, double> range,
                    TrainedClassifier& classifier, double& yes_energy, double& no_energy) {
    classifier.set_coefficients(shift_into_range(raw, range));
    WeightedTermList h = assemble_hamiltonian(classifier);
    yes_energy = mean_energy(h, graph, dataset.yes());
    no_energy = mean_energy(h, graph, dataset.no());
    if (yes_energy <= no_energy) return false;

    for (auto& r : raw) r = -r;
    classifier.set_coefficients(shift_into_range(raw, range));
    h = assemble_hamiltonian(classifier);
    yes_energy = mean_energy(h, graph, dataset.yes());
    no_energy = mean_energy(h, graph, dataset.no());
    return true;
}

TrainingLayout make_layout(const InteractionGraph& graph,
                           const std::vector<TermInstance>& instances,
                           const TrainingOptions& options) {
    return build_training_layout(graph, instances, options.mode, options.grouping,
                                 options.anneal.qubit_cap, options.delta);
}

json options_to_json(const TrainingOptions& options) {
    json j;
    j["mode"] = options.mode == LayoutMode::PerTerm ? "per-term" : "qudit";
    j["grouping"] = options.grouping.describe();
    j["weight_range"] = {options.weight_range.first, options.weight_range.second};
    j["steps"] = options.anneal.steps;
    j["trotter"] = options.anneal.trotter;
    j["total_time"] = options.anneal.total_time;
    j["delta"] = options.delta;
    j["qubit_cap"] = options.anneal.qubit_cap;
    auto curve = [](const std::vector<SchedulePoint>& c) {
        json arr = json::array();
        for (const auto& p : c) arr.push_back({p.t, p.s});
        return arr;
    };
    j["schedule"] = {{"driver", curve(options.schedule.driver_curve())},
                     {"data", curve(options.schedule.data_curve())},
                     {"control", curve(options.schedule.control_curve())}};
    return j;
}

TrainingOptions options_from_json(const json& j) {
    TrainingOptions options;
    options.mode = j.at("mode") == "qudit" ? LayoutMode::Qudit : LayoutMode::PerTerm;
    options.grouping = GroupingRule::parse(j.at("grouping").get<std::string>());
    options.weight_range = {j.at("weight_range")[0].get<double>(),
                            j.at("weight_range")[1].get<double>()};
    options.anneal.steps = j.at("steps").get<int>();
    options.anneal.trotter = j.at("trotter").get<int>();
    options.anneal.total_time = j.at("total_time").get<double>();
    options.delta = j.at("delta").get<double>();
    options.anneal.qubit_cap = j.at("qubit_cap").get<int>();
    auto curve = [](const json& arr) {
        std::vector<SchedulePoint> c;
        for (const auto& p : arr) c.push_back({p[0].get<double>(), p[1].get<double>()});
        return c;
    };
    options.schedule = AnnealSchedule(curve(j.at("schedule").at("driver")),
                                      curve(j.at("schedule").at("data")),
                                      curve(j.at("schedule").at("control")));
    return options;
}

}  // namespace

std::vector<double> normalize_marginals(const std::vector<double>& values) {
    if (values.empty()) return {};
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(values.size(), 0.0);
    if (hi - lo <= 1e-12) return out;  // degenerate spread contributes zeros
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / (hi - lo);
    return out;
}

StateVector datum_state(const InteractionGraph& graph, const std::string& datum) {
    const std::vector<int> data = graph.data_vertices();
    if (datum.size() != data.size())
        throw std::invalid_argument("datum length does not match the data register");
    const int n = graph.vertex_count();
    const std::vector<int> hidden = graph.hidden_vertices();
    StateVector state(n);
    index_t pinned = 0;
    for (std::size_t i = 0; i < data.size(); ++i)
        pinned = set_qubit(pinned, data[i], n, datum[i] == '1');
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim(static_cast<int>(hidden.size()))));
    for (index_t h = 0; h < dim(static_cast<int>(hidden.size())); ++h) {
        index_t idx = pinned;
        for (std::size_t i = 0; i < hidden.size(); ++i)
            idx = set_qubit(idx, hidden[i], n,
                            (h >> (hidden.size() - 1 - i)) & 1);
        state[idx] = amp;
    }
    return state;
}

double datum_energy(const WeightedTermList& hamiltonian, const InteractionGraph& graph,
                    const std::string& datum) {
    return expectation_and_std(datum_state(graph, datum), hamiltonian).first;
}

double mean_energy(const WeightedTermList& hamiltonian, const InteractionGraph& graph,
                   const std::vector<std::string>& data) {
    if (data.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& l : data) acc += datum_energy(hamiltonian, graph, l);
    return acc / static_cast<double>(data.size());
}

TrainingReport train_one_shot(const InteractionGraph& graph, const LabeledDataset& dataset,
                              const TrainingOptions& options) {
    require_both_sides(dataset);
    const auto instances = enumerate_term_instances(graph);
    const TrainingLayout layout = make_layout(graph, instances, options);
    const WeightedTermList driver = driver_hamiltonian(layout.total_qubits());
    const WeightedTermList control = controlled_family(layout, instances);

    auto marginals_for = [&](DataSide side) {
        const WeightedTermList data =
            data_projector(graph, dataset, side).scaled(-options.delta);
        const AnnealResult result = run_training_anneal(graph, layout, driver, data, control,
                                                        options.anneal, options.schedule);
        return result.controls.instance_activation;
    };

    TrainingReport report{TrainedClassifier(graph, options.weight_range), "one-shot"};
    report.options = options;
    report.training_qubits = layout.total_qubits();
    report.yes_marginals = marginals_for(DataSide::Yes);
    report.no_marginals = marginals_for(DataSide::No);
    report.yes_shifted = normalize_marginals(report.yes_marginals);
    report.no_shifted = normalize_marginals(report.no_marginals);

    std::vector<double> raw(report.yes_shifted.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        raw[i] = report.no_shifted[i] - report.yes_shifted[i];

    report.sign_flipped = calibrate_sign(graph, dataset, raw, options.weight_range,
                                         report.trained, report.yes_mean_energy,
                                         report.no_mean_energy);
    return report;
}

TrainingReport train_serial(const InteractionGraph& graph, const LabeledDataset& dataset,
                            const TrainingOptions& options) {
    require_both_sides(dataset);
    const auto instances = enumerate_term_instances(graph);
    const TrainingLayout layout = make_layout(graph, instances, options);
    const WeightedTermList driver = driver_hamiltonian(layout.total_qubits());
    const WeightedTermList control = controlled_family(layout, instances);

    std::vector<std::string> all_data = dataset.yes();
    all_data.insert(all_data.end(), dataset.no().begin(), dataset.no().end());

    auto member_set = [&](const std::string& datum) {
        WeightedTermList data;
        data.add(-options.delta, datum_projector(graph, datum));
        const AnnealResult result = run_training_anneal(graph, layout, driver, data, control,
                                                        options.anneal, options.schedule);
        // Degenerate ground spaces keep raw marginals at or below one half,
        // so membership is read off the normalized pattern, matching the
        // one-shot shift step.
        const auto shifted = normalize_marginals(result.controls.instance_activation);
        std::vector<int> members;
        for (std::size_t i = 0; i < shifted.size(); ++i)
            if (shifted[i] > 0.5) members.push_back(static_cast<int>(i));
        return members;
    };

    // Independent anneals, joined in datum order so reports are
    // deterministic regardless of scheduling.
    std::vector<std::vector<int>> sets(all_data.size());
    const int workers = std::max(1, options.workers);
    std::vector<std::future<void>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < all_data.size();
                 i += static_cast<std::size_t>(workers))
                sets[i] = member_set(all_data[i]);
        }));
    }
    for (auto& f : futures) f.get();

    TrainingReport report{TrainedClassifier(graph, options.weight_range), "serial"};
    report.options = options;
    report.training_qubits = layout.total_qubits();
    report.per_datum_sets = std::move(sets);

    const std::size_t yes_count = dataset.yes().size();
    std::vector<double> raw(instances.size(), 0.0);
    for (std::size_t d = 0; d < report.per_datum_sets.size(); ++d) {
        const double share = d < yes_count ? 1.0 / static_cast<double>(dataset.yes().size())
                                           : -1.0 / static_cast<double>(dataset.no().size());
        for (int i : report.per_datum_sets[d]) raw[static_cast<std::size_t>(i)] += share;
    }

    report.sign_flipped = calibrate_sign(graph, dataset, raw, options.weight_range,
                                         report.trained, report.yes_mean_energy,
                                         report.no_mean_energy);
    return report;
}

TrainingReport train_exact_lp(const InteractionGraph& graph, const LabeledDataset& dataset,
                              const TrainingOptions& options) {
    const auto instances = enumerate_term_instances(graph);
    const std::vector<int> data_vertices = graph.data_vertices();
    const std::vector<int> hidden = graph.hidden_vertices();

    // c_{e,h}(l) = tr(tr_hidden(h) |l><l|): the diagonal entry of the term's
    // hidden-leg partial trace at the datum's restriction, times 2 for every
    // hidden vertex the term does not touch.
    auto trace_against = [&](const TermInstance& inst, const std::string& datum) {
        const int k = static_cast<int>(inst.targets.size());
        int hidden_outside = 0;
        for (int h : hidden)
            if (std::find(inst.targets.begin(), inst.targets.end(), h) == inst.targets.end())
                ++hidden_outside;
        double acc = 0.0;
        for (index_t j = 0; j < dim(k); ++j) {
            bool match = true;
            for (int leg = 0; leg < k && match; ++leg) {
                const int vertex = inst.targets[static_cast<std::size_t>(leg)];
                const auto pos = std::find(data_vertices.begin(), data_vertices.end(), vertex);
                if (pos == data_vertices.end()) continue;  // hidden leg: summed over
                const bool bit = (j >> (k - 1 - leg)) & 1;
                const char want = datum[static_cast<std::size_t>(pos - data_vertices.begin())];
                match = (bit == (want == '1'));
            }
            if (match)
                acc += inst.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)).real();
        }
        return acc * static_cast<double>(dim(hidden_outside));
    };

    TrainingReport report{TrainedClassifier(graph, options.weight_range), "exact-lp"};
    report.options = options;
    report.training_qubits = graph.vertex_count();
    report.lp_coefficients.assign(instances.size(), 0.0);

    std::vector<double> weights(instances.size(), 0.0);
    const auto [lo, hi] = options.weight_range;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        double kappa = 0.0;
        for (const auto& l : dataset.yes())
            kappa += trace_against(instances[i], l) / static_cast<double>(dataset.yes().size());
        for (const auto& l : dataset.no())
            kappa -= trace_against(instances[i], l) / static_cast<double>(dataset.no().size());
        report.lp_coefficients[i] = kappa;
        // Separable linear objective over a box: min of a*kappa sits at an
        // interval end, ties rest at zero.
        if (std::abs(kappa) <= tolerances().coefficient_tie)
            weights[i] = std::clamp(0.0, lo, hi);
        else
            weights[i] = kappa > 0 ? lo : hi;
    }
    report.trained.set_coefficients(weights);

    const WeightedTermList h = assemble_hamiltonian(report.trained);
    report.yes_mean_energy = mean_energy(h, graph, dataset.yes());
    report.no_mean_energy = mean_energy(h, graph, dataset.no());
    return report;
}

TrainingReport train_projected_oracle(const InteractionGraph& graph, const LabeledDataset& dataset,
                                      const TrainingOptions& options) {
    const auto instances = enumerate_term_instances(graph);
    TrainingOptions capped = options;
    capped.anneal.qubit_cap = std::min(options.anneal.qubit_cap, kOracleQubitCap);
    const TrainingLayout layout = make_layout(graph, instances, capped);
    const int n = layout.total_qubits();

    const Matrix h_c = dense_matrix(controlled_family(layout, instances), n);
    const Matrix pi = dense_matrix(data_projector(graph, dataset, DataSide::Yes), n);
    const Matrix projected = pi * h_c * pi;

    TrainingReport report{TrainedClassifier(graph, options.weight_range), "projected-oracle"};
    report.options = options;
    report.training_qubits = layout.total_qubits();

    // Joint control-register diagonal of the system partial trace; the
    // minimal blocks mark the interaction subsets with the largest
    // data-subspace bonus. Terms of any minimal block are selected.
    const std::vector<int> controls = layout.control_qubits();
    const int m = static_cast<int>(controls.size());
    report.traced_diagonal = partial_trace_diagonal(projected, n, controls);
    const auto& traced = report.traced_diagonal;
    const double lowest = *std::min_element(traced.begin(), traced.end());
    const double spread = *std::max_element(traced.begin(), traced.end()) - lowest;
    const double window = tolerances().degeneracy * (spread + 1.0);

    std::vector<char> selected(instances.size(), 0);
    std::vector<int> group_offset(layout.groups().size(), 0);
    for (int g = 1; g < static_cast<int>(layout.groups().size()); ++g)
        group_offset[static_cast<std::size_t>(g)] =
            group_offset[static_cast<std::size_t>(g - 1)] +
            static_cast<int>(layout.groups()[static_cast<std::size_t>(g - 1)].control_qubits.size());
    for (index_t v = 0; v < traced.size(); ++v) {
        if (traced[v] > lowest + window) continue;
        for (int g = 0; g < static_cast<int>(layout.groups().size()); ++g) {
            const int bits =
                static_cast<int>(layout.groups()[static_cast<std::size_t>(g)].control_qubits.size());
            const index_t sub =
                (v >> (m - group_offset[static_cast<std::size_t>(g)] - bits)) & (dim(bits) - 1);
            for (int inst : layout.groups()[static_cast<std::size_t>(g)].instance_indices)
                if (layout.pattern_activates(g, sub, inst))
                    selected[static_cast<std::size_t>(inst)] = 1;
        }
    }

    std::vector<double> raw(instances.size(), 0.0);
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = selected[i] ? 1.0 : 0.0;
    report.sign_flipped = calibrate_sign(graph, dataset, raw, options.weight_range,
                                         report.trained, report.yes_mean_energy,
                                         report.no_mean_energy);
    return report;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

std::string TrainingReport::to_json_string() const {
    json j;
    j["method"] = method;
    j["graph"] = json::parse(trained.graph().to_json_string());
    j["seed"] = trained.graph().seed();
    j["sign_flipped"] = sign_flipped;
    j["yes_mean_energy"] = yes_mean_energy;
    j["no_mean_energy"] = no_mean_energy;
    j["training_qubits"] = training_qubits;
    j["config"] = options_to_json(options);

    json weights = json::array();
    for (int i = 0; i < trained.instance_count(); ++i) {
        const auto& inst = trained.instances()[static_cast<std::size_t>(i)];
        json w;
        w["edge"] = inst.edge_index;
        w["vertex"] = inst.vertex_index;
        w["term"] = inst.term_index;
        w["label"] = inst.label;
        w["weight"] = trained.coefficient(i);
        weights.push_back(std::move(w));
    }
    j["weights"] = std::move(weights);

    if (!yes_marginals.empty()) {
        j["yes_marginals"] = yes_marginals;
        j["no_marginals"] = no_marginals;
        j["yes_shifted"] = yes_shifted;
        j["no_shifted"] = no_shifted;
    }
    if (!per_datum_sets.empty()) j["per_datum_sets"] = per_datum_sets;
    if (!lp_coefficients.empty()) j["lp_coefficients"] = lp_coefficients;
    if (!traced_diagonal.empty()) j["traced_diagonal"] = traced_diagonal;
    return j.dump(2);
}

void TrainingReport::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << to_json_string() << "\n";
}

TrainingReport load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report file: " + path);
    json j = json::parse(in);

    InteractionGraph graph = InteractionGraph::from_json_string(j.at("graph").dump());
    TrainingOptions options = options_from_json(j.at("config"));
    TrainingReport report{TrainedClassifier(std::move(graph), options.weight_range),
                          j.at("method").get<std::string>()};
    report.options = std::move(options);
    report.sign_flipped = j.at("sign_flipped").get<bool>();
    report.yes_mean_energy = j.at("yes_mean_energy").get<double>();
    report.no_mean_energy = j.at("no_mean_energy").get<double>();
    report.training_qubits = j.at("training_qubits").get<int>();

    const auto& weights = j.at("weights");
    if (static_cast<int>(weights.size()) != report.trained.instance_count())
        throw std::runtime_error("report weights do not match the graph's term instances");
    for (int i = 0; i < report.trained.instance_count(); ++i)
        report.trained.set_coefficient(i, weights[static_cast<std::size_t>(i)].at("weight").get<double>());

    if (j.contains("yes_marginals")) {
        report.yes_marginals = j.at("yes_marginals").get<std::vector<double>>();
        report.no_marginals = j.at("no_marginals").get<std::vector<double>>();
        report.yes_shifted = j.at("yes_shifted").get<std::vector<double>>();
        report.no_shifted = j.at("no_shifted").get<std::vector<double>>();
    }
    if (j.contains("lp_coefficients"))
        report.lp_coefficients = j.at("lp_coefficients").get<std::vector<double>>();
    if (j.contains("per_datum_sets"))
        report.per_datum_sets = j.at("per_datum_sets").get<std::vector<std::vector<int>>>();
    if (j.contains("traced_diagonal"))
        report.traced_diagonal = j.at("traced_diagonal").get<std::vector<double>>();
    return report;
}

}  // namespace hamclass
