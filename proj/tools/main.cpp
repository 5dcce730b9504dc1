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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <random>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "hamclass/color_task.hpp"
#include "hamclass/eval.hpp"
#include "hamclass/oracle.hpp"
#include "hamclass/svg.hpp"
#include "hamclass/train.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hamclass;

namespace {

// exit 0: success, 1: internal numeric failure, 2: user or config error
struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    std::string graph_spec;
    std::string data_path;
    std::string set_override;
    std::uint64_t seed = 0;
    std::string method = "one-shot";
    std::string mode = "per-term";
    std::string group = "all";
    std::string range = "-1,1";
    int steps = 100;
    int trotter = 30;
    double tau = 20.0;
    double delta = 1.0;
    int workers = 2;
    std::string out_dir = ".";
    std::string sched_driver, sched_data, sched_control;
};

void add_anneal_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--steps,-R", flags.steps, "annealing interval subdivisions R");
    cmd->add_option("--trotter,-T", flags.trotter, "Trotter subdivisions n_T");
    cmd->add_option("--tau", flags.tau, "total annealing time");
    cmd->add_option("--delta", flags.delta, "data projector scale (>= 1)");
    cmd->add_option("--schedule-driver", flags.sched_driver,
                    "driver breakpoints, e.g. 0:1,0.125:1,1:0");
    cmd->add_option("--schedule-data", flags.sched_data, "data projector breakpoints");
    cmd->add_option("--schedule-control", flags.sched_control, "control breakpoints");
    cmd->add_option("--out,-o", flags.out_dir, "output directory");
}

void add_layout_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--mode", flags.mode, "per-term or qudit")
        ->check(CLI::IsMember({"per-term", "qudit"}));
    cmd->add_option("--group", flags.group, "qudit grouping: all, edge, or a tuple size");
    cmd->add_option("--range", flags.range, "weight range lo,hi (default -1,1)");
}

std::vector<SchedulePoint> parse_curve(const std::string& text) {
    std::vector<SchedulePoint> points;
    std::istringstream ss(text);
    std::string chunk;
    while (std::getline(ss, chunk, ',')) {
        const auto colon = chunk.find(':');
        if (colon == std::string::npos)
            throw UserError("schedule breakpoints must look like t:s,t:s,...");
        points.push_back({std::stod(chunk.substr(0, colon)), std::stod(chunk.substr(colon + 1))});
    }
    return points;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UserError("--range expects lo,hi");
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

TrainingOptions build_options(const CommonFlags& flags) {
    TrainingOptions options;
    options.mode = flags.mode == "qudit" ? LayoutMode::Qudit : LayoutMode::PerTerm;
    options.grouping = GroupingRule::parse(flags.group);
    options.weight_range = parse_range(flags.range);
    options.anneal.steps = flags.steps;
    options.anneal.trotter = flags.trotter;
    options.anneal.total_time = flags.tau;
    options.delta = flags.delta;
    options.workers = flags.workers;
    if (flags.steps < 1 || flags.trotter < 1 || flags.tau <= 0)
        throw UserError("anneal parameters must be positive");
    if (!flags.sched_driver.empty() || !flags.sched_data.empty() ||
        !flags.sched_control.empty()) {
        const auto defaults = AnnealSchedule::defaults();
        options.schedule = AnnealSchedule(
            flags.sched_driver.empty() ? defaults.driver_curve() : parse_curve(flags.sched_driver),
            flags.sched_data.empty() ? defaults.data_curve() : parse_curve(flags.sched_data),
            flags.sched_control.empty() ? defaults.control_curve()
                                        : parse_curve(flags.sched_control));
    }
    return options;
}

InteractionGraph resolve_graph(const CommonFlags& flags) {
    constexpr const char* kPresetPrefix = "preset:";
    if (flags.graph_spec.rfind(kPresetPrefix, 0) == 0) {
        const std::string name = flags.graph_spec.substr(std::string(kPresetPrefix).size());
        const std::string set = flags.set_override.empty() ? "Proj" : flags.set_override;
        return InteractionGraph::preset(name, set, flags.seed);
    }
    if (!fs::exists(flags.graph_spec))
        throw UserError("graph file does not exist: " + flags.graph_spec);
    InteractionGraph graph = InteractionGraph::load(flags.graph_spec);
    if (flags.set_override.empty() && flags.seed == 0) return graph;
    std::vector<Hyperedge> edges = graph.edges();
    if (!flags.set_override.empty())
        for (auto& e : edges) e.set_name = flags.set_override;
    return InteractionGraph(graph.vertices(), std::move(edges),
                            flags.seed != 0 ? flags.seed : graph.seed());
}

LabeledDataset resolve_dataset(const CommonFlags& flags) {
    if (!fs::exists(flags.data_path))
        throw UserError("dataset file does not exist: " + flags.data_path);
    return LabeledDataset::load(flags.data_path);
}

void ensure_out_dir(const std::string& dir) {
    if (!dir.empty() && !fs::exists(dir)) fs::create_directories(dir);
}

TrainingReport dispatch_training(const std::string& method, const InteractionGraph& graph,
                                 const LabeledDataset& dataset, const TrainingOptions& options) {
    if (method == "one-shot") return train_one_shot(graph, dataset, options);
    if (method == "serial") return train_serial(graph, dataset, options);
    if (method == "lp") return train_exact_lp(graph, dataset, options);
    if (method == "projected") return train_projected_oracle(graph, dataset, options);
    throw UserError("unknown training method: " + method);
}

void print_report_summary(const TrainingReport& report) {
    const auto& trained = report.trained;
    std::cout << "method: " << report.method << "\n";
    std::cout << "training register: " << report.training_qubits << " qubits ("
              << trained.graph().vertex_count() << " vertices + "
              << report.training_qubits - trained.graph().vertex_count() << " controls)\n";
    std::cout << "sign calibration flipped: " << (report.sign_flipped ? "yes" : "no") << "\n";
    std::cout << "mean training energy: YES " << report.yes_mean_energy << ", NO "
              << report.no_mean_energy << "\n";
    std::cout << "weights:\n";
    for (int i = 0; i < trained.instance_count(); ++i)
        std::cout << "  " << trained.instances()[static_cast<std::size_t>(i)].label << " = "
                  << trained.coefficient(i) << "\n";
}

int cmd_train(const CommonFlags& flags) {
    const InteractionGraph graph = resolve_graph(flags);
    const LabeledDataset dataset = resolve_dataset(flags);
    const TrainingOptions options = build_options(flags);
    const TrainingReport report = dispatch_training(flags.method, graph, dataset, options);
    ensure_out_dir(flags.out_dir);
    const std::string path = flags.out_dir + "/report.json";
    report.save(path);
    print_report_summary(report);
    std::cout << "report written to " << path << "\n";
    return 0;
}

int cmd_classify(const CommonFlags& flags, const std::string& report_path) {
    if (!fs::exists(report_path)) throw UserError("report file does not exist: " + report_path);
    const TrainingReport report = load_report(report_path);
    const LabeledDataset dataset = resolve_dataset(flags);
    if (dataset.width() != static_cast<int>(report.trained.graph().data_vertices().size()))
        throw UserError("dataset width does not match the trained graph");

    std::vector<std::string> data = dataset.yes();
    std::vector<std::string> labels(data.size(), "YES");
    data.insert(data.end(), dataset.no().begin(), dataset.no().end());
    labels.insert(labels.end(), dataset.no().size(), "NO");

    auto records = evaluate_dataset(report.trained, data, labels, report.options.anneal,
                                    report.options.schedule);
    const auto metrics = benchmark_metrics(records, dataset);

    ensure_out_dir(flags.out_dir);
    const std::string csv_path = flags.out_dir + "/classified.csv";
    write_records_csv(csv_path, records, report.to_json_string());
    std::cout << "fidelity: " << metrics.fidelity_pct << " %\n";
    std::cout << "delta_E: " << metrics.delta_e << "\n";
    std::cout << "threshold: " << metrics.threshold << " (YES side "
              << (metrics.yes_above_threshold ? "above" : "below") << ")\n";
    std::cout << "records written to " << csv_path << "\n";
    return 0;
}

json sweep_config_json(const CommonFlags& flags, int bits) {
    json j;
    j["bits"] = bits;
    j["mode"] = flags.mode;
    j["group"] = flags.group;
    j["range"] = flags.range;
    j["tau"] = flags.tau;
    j["delta"] = flags.delta;
    j["seed"] = flags.seed;
    return j;
}

int cmd_color(CommonFlags flags, int bits) {
    if (bits != 6 && bits != 9) throw UserError("--bits must be 6 or 9");
    // Per-term control registers exceed the cap for both color graphs; the
    // qudit-compressed register is the supported configuration.
    if (flags.mode == "per-term") {
        const auto counts = count_training_qubits(color_graph(bits), LayoutMode::PerTerm);
        throw UserError("per-term mode needs " + std::to_string(counts.total) +
                        " qubits on the " + std::to_string(bits) +
                        "-bit task; use --mode qudit (default grouping: all)");
    }
    const TrainingOptions options = build_options(flags);
    const ColorTaskResult result = run_color_task(bits, options);

    ensure_out_dir(flags.out_dir);
    json config = sweep_config_json(flags, bits);
    config["steps"] = flags.steps;
    config["trotter"] = flags.trotter;
    const std::string config_str = config.dump();

    const std::string csv_path =
        flags.out_dir + "/color" + std::to_string(bits) + "-records.csv";
    write_records_csv(csv_path, result.records, config_str);
    write_color_plots(result, bits, flags.out_dir, config_str);
    result.report.save(flags.out_dir + "/color" + std::to_string(bits) + "-report.json");

    std::cout << "records: " << result.records.size() << "\n";
    std::cout << "fidelity on training colors: " << result.metrics.fidelity_pct << " %\n";
    std::cout << "mean energy blue (YES): " << result.metrics.yes_energy_mean << "\n";
    std::cout << "mean energy red  (NO): " << result.metrics.no_energy_mean << "\n";
    std::cout << "delta_E: " << result.metrics.delta_e << "\n";
    std::cout << "outputs in " << flags.out_dir << "\n";
    return 0;
}

std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> values;
    std::istringstream ss(text);
    std::string chunk;
    while (std::getline(ss, chunk, ',')) values.push_back(std::stoi(chunk));
    if (values.empty()) throw UserError("grid lists cannot be empty");
    return values;
}

int cmd_sweep(CommonFlags flags, int bits, const std::string& trotter_grid,
              const std::string& steps_grid) {
    if (flags.mode == "per-term") flags.mode = "qudit";
    const std::vector<int> trotters = parse_grid(trotter_grid);
    const std::vector<int> step_counts = parse_grid(steps_grid);

    struct Cell {
        int trotter, steps;
        double fidelity = 0.0, delta_e = 0.0, seconds = 0.0;
    };
    std::vector<Cell> cells;
    for (int nt : trotters)
        for (int r : step_counts) cells.push_back({nt, r});

    const int workers = std::max(1, flags.workers);
    std::vector<std::future<void>> futures;
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < cells.size();
                 i += static_cast<std::size_t>(workers)) {
                CommonFlags cell_flags = flags;
                cell_flags.trotter = cells[i].trotter;
                cell_flags.steps = cells[i].steps;
                const auto begin = std::chrono::steady_clock::now();
                const ColorTaskResult result =
                    run_color_task(bits, build_options(cell_flags));
                const auto end = std::chrono::steady_clock::now();
                cells[i].fidelity = result.metrics.fidelity_pct;
                cells[i].delta_e = result.metrics.delta_e;
                cells[i].seconds = std::chrono::duration<double>(end - begin).count();
            }
        }));
    }
    for (auto& f : futures) f.get();

    ensure_out_dir(flags.out_dir);
    const std::string csv_path = flags.out_dir + "/sweep.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "# " << sweep_config_json(flags, bits).dump() << "\n";
    csv << "trotter,steps,fidelity_pct,delta_e,runtime_s\n";
    for (const auto& c : cells)
        csv << c.trotter << ',' << c.steps << ',' << c.fidelity << ',' << c.delta_e << ','
            << c.seconds << "\n";

    const Cell& reference = cells.back();  // largest trotter and step count
    std::cout << "trotter steps fidelity dFid(vs " << reference.trotter << ","
              << reference.steps << ")\n";
    for (const auto& c : cells)
        std::cout << c.trotter << "\t" << c.steps << "\t" << c.fidelity << "\t"
                  << c.fidelity - reference.fidelity << "\n";
    std::cout << "sweep written to " << csv_path << "\n";
    return 0;
}

int cmd_bench(const CommonFlags& flags, const std::string& graphs_list,
              const std::string& sets_list, int dataset_count) {
    std::vector<std::string> graphs, sets;
    {
        std::istringstream gs(graphs_list), ss(sets_list);
        std::string chunk;
        while (std::getline(gs, chunk, ',')) graphs.push_back(chunk);
        while (std::getline(ss, chunk, ',')) sets.push_back(chunk);
    }

    ensure_out_dir(flags.out_dir);
    const std::string csv_path = flags.out_dir + "/bench.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    json config = sweep_config_json(flags, 0);
    config["steps"] = flags.steps;
    config["trotter"] = flags.trotter;
    config["datasets"] = dataset_count;
    csv << "# " << config.dump() << "\n";
    csv << "graph,set,datasets,qubits_per_term,qubits_qudit,fidelity_pct,delta_e\n";

    std::cout << "graph           set     #   N(opt)  f[%]   dE\n";
    for (const auto& graph_name : graphs) {
        for (const auto& set_name : sets) {
            const InteractionGraph graph =
                InteractionGraph::preset(graph_name, set_name, flags.seed + 17);
            const auto per_term = count_training_qubits(graph, LayoutMode::PerTerm);
            const auto qudit = count_training_qubits(graph, LayoutMode::Qudit, GroupingRule{});

            CommonFlags run_flags = flags;
            run_flags.mode = "qudit";
            const TrainingOptions options = build_options(run_flags);

            const int data_bits = static_cast<int>(graph.data_vertices().size());
            const index_t space = dim(data_bits);
            const int per_side = static_cast<int>(std::min<index_t>(4, space / 2));

            double fidelity_acc = 0.0, delta_acc = 0.0;
            for (int d = 0; d < dataset_count; ++d) {
                // Seeded shuffle of the data space picks the labelled strings.
                std::vector<index_t> order(space);
                for (index_t i = 0; i < space; ++i) order[i] = i;
                std::mt19937_64 rng(flags.seed + 1000 * d + std::hash<std::string>{}(
                                                                graph_name + set_name));
                for (index_t i = space - 1; i > 0; --i)
                    std::swap(order[i], order[rng() % (i + 1)]);
                std::vector<std::string> yes, no;
                for (int i = 0; i < per_side; ++i) {
                    yes.push_back(bitstring(order[static_cast<index_t>(i)], data_bits));
                    no.push_back(bitstring(order[static_cast<index_t>(per_side + i)], data_bits));
                }
                const LabeledDataset dataset(yes, no);
                const TrainingReport report = train_one_shot(graph, dataset, options);

                std::vector<std::string> all;
                std::vector<std::string> labels;
                for (index_t s = 0; s < space; ++s) {
                    all.push_back(bitstring(s, data_bits));
                    if (std::find(yes.begin(), yes.end(), all.back()) != yes.end())
                        labels.emplace_back("YES");
                    else if (std::find(no.begin(), no.end(), all.back()) != no.end())
                        labels.emplace_back("NO");
                    else
                        labels.emplace_back("");
                }
                auto records = evaluate_dataset(report.trained, all, labels, options.anneal,
                                                options.schedule);
                const auto metrics = benchmark_metrics(records, dataset);
                fidelity_acc += metrics.fidelity_pct;
                delta_acc += metrics.delta_e;
            }
            const double fidelity = fidelity_acc / dataset_count;
            const double delta_e = delta_acc / dataset_count;
            csv << graph_name << ',' << set_name << ',' << dataset_count << ','
                << per_term.total << ',' << qudit.total << ',' << fidelity << ',' << delta_e
                << "\n";
            std::printf("%-15s %-7s %-3d %2d (%2d)  %5.1f  %.3f\n", graph_name.c_str(),
                        set_name.c_str(), dataset_count, per_term.total, qudit.total, fidelity,
                        delta_e);
        }
    }
    std::cout << "table written to " << csv_path << "\n";
    return 0;
}

int cmd_oracle(const CommonFlags& flags, const std::string& report_path) {
    if (!fs::exists(report_path)) throw UserError("report file does not exist: " + report_path);
    const TrainingReport report = load_report(report_path);
    const InteractionGraph& graph = report.trained.graph();
    const int n = graph.vertex_count();
    if (n > kOracleQubitCap)
        throw UserError("graph register exceeds the exact-diagonalization cap");

    const WeightedTermList h = assemble_hamiltonian(report.trained);
    const Spectrum spectrum = exact_spectrum(h, n);
    std::cout << "ground energy: " << spectrum.ground_energy() << "\n";
    std::cout << "ground degeneracy: " << spectrum.ground_dimension() << "\n";

    const auto marginal = ground_space_data_marginal(spectrum, n, graph.data_vertices());
    std::cout << "ground-space data marginal (entries above 1e-6):\n";
    for (index_t i = 0; i < marginal.size(); ++i)
        if (marginal[i] > 1e-6)
            std::cout << "  " << bitstring(i, static_cast<int>(graph.data_vertices().size()))
                      << "  " << marginal[i] << "\n";

    if (!flags.data_path.empty()) {
        const LabeledDataset dataset = resolve_dataset(flags);
        const auto scores = overlap_scores(h, n, graph.data_vertices(), dataset);
        std::cout << "overlap means: YES " << scores.yes_mean << ", NO " << scores.no_mean
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ground-space classifier Hamiltonians: training, evaluation, benchmarks"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string report_path;
    int bits = 6;
    std::string trotter_grid = "5,10,20,30,40,50,75,100,125,150";
    std::string steps_grid = "5,10,20,30,40,50,75,100,125,150";
    std::string graphs_list = "edge,path-3";
    std::string sets_list = "Proj,Pauli,Rand,Heis,Ising";
    int dataset_count = 3;

    auto* train_cmd = app.add_subcommand("train", "train a classifier Hamiltonian");
    train_cmd->add_option("--graph,-g", flags.graph_spec, "graph JSON file or preset:<name>")
        ->required();
    train_cmd->add_option("--data,-d", flags.data_path, "dataset file (`bits YES|NO` lines)")
        ->required();
    train_cmd->add_option("--set,-s", flags.set_override,
                          "interaction set for all edges (Proj, Pauli, Rand, Heis, Ising)");
    train_cmd->add_option("--seed", flags.seed, "seed for random interaction sets");
    train_cmd->add_option("--method,-m", flags.method, "one-shot, serial, lp, or projected")
        ->check(CLI::IsMember({"one-shot", "serial", "lp", "projected"}));
    train_cmd->add_option("--workers", flags.workers, "concurrent anneals (serial method)");
    add_layout_flags(train_cmd, flags);
    add_anneal_flags(train_cmd, flags);

    auto* classify_cmd = app.add_subcommand("classify", "evaluate a trained report on a dataset");
    classify_cmd->add_option("--report,-r", report_path, "trained report JSON")->required();
    classify_cmd->add_option("--data,-d", flags.data_path, "labelled dataset file")->required();
    classify_cmd->add_option("--out,-o", flags.out_dir, "output directory");

    auto* color_cmd = app.add_subcommand("color", "red-vs-blue color classification task");
    color_cmd->add_option("--bits,-b", bits, "6 or 9")->required();
    add_layout_flags(color_cmd, flags);
    add_anneal_flags(color_cmd, flags);

    auto* sweep_cmd = app.add_subcommand("sweep", "fidelity over a (n_T, R) parameter grid");
    sweep_cmd->add_option("--bits,-b", bits, "color task size (default 6)");
    sweep_cmd->add_option("--trotter-grid", trotter_grid, "comma list of n_T values");
    sweep_cmd->add_option("--steps-grid", steps_grid, "comma list of R values");
    sweep_cmd->add_option("--workers", flags.workers, "concurrent sweep cells");
    add_layout_flags(sweep_cmd, flags);
    add_anneal_flags(sweep_cmd, flags);

    auto* bench_cmd = app.add_subcommand("bench-interactions",
                                         "benchmark interaction sets on preset graphs");
    bench_cmd->add_option("--graphs", graphs_list, "comma list of graph presets");
    bench_cmd->add_option("--sets", sets_list, "comma list of interaction sets");
    bench_cmd->add_option("--datasets", dataset_count, "random training datasets per cell");
    bench_cmd->add_option("--seed", flags.seed, "base seed");
    bench_cmd->add_option("--workers", flags.workers, "reserved");
    add_anneal_flags(bench_cmd, flags);

    auto* oracle_cmd = app.add_subcommand("oracle", "exact-diagonalization report for a classifier");
    oracle_cmd->add_option("--report,-r", report_path, "trained report JSON")->required();
    oracle_cmd->add_option("--data,-d", flags.data_path, "optional dataset for overlap scores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (train_cmd->parsed()) return cmd_train(flags);
        if (classify_cmd->parsed()) return cmd_classify(flags, report_path);
        if (color_cmd->parsed()) {
            if (!color_cmd->count("--mode")) flags.mode = "qudit";
            return cmd_color(flags, bits);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(flags, bits, trotter_grid, steps_grid);
        if (bench_cmd->parsed()) return cmd_bench(flags, graphs_list, sets_list, dataset_count);
        if (oracle_cmd->parsed()) return cmd_oracle(flags, report_path);
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
