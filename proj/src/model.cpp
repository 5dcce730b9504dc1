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

#include "hamclass/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hamclass {

namespace {

using nlohmann::json;

Matrix pauli(char which) {
    Matrix m = Matrix::Zero(2, 2);
    switch (which) {
        case 'i': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'y': m(0, 1) = complex_t(0.0, -1.0); m(1, 0) = complex_t(0.0, 1.0); break;
        case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::invalid_argument("unknown Pauli label");
    }
    return m;
}

Matrix kron2(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Deterministic standard normals: explicit Box-Muller on top of the
// standard-specified mt19937_64 stream, so seeds reproduce across platforms.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * M_PI * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

  private:
    double uniform() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

Matrix random_hermitian_unit_norm(NormalStream& rng, int dim_size) {
    Matrix a(dim_size, dim_size);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const double re = rng.next();
            const double im = rng.next();
            a(i, j) = complex_t(re, im);
        }
    Matrix h = 0.5 * (a + Matrix(a.adjoint()));
    const double norm = spectral_norm(h);
    if (norm > 0) h /= norm;
    return h;
}

VertexRole parse_role(const std::string& s) {
    if (s == "data") return VertexRole::Data;
    if (s == "hidden") return VertexRole::Hidden;
    throw std::invalid_argument("unknown vertex role: " + s);
}

}  // namespace

// ---------------------------------------------------------------------------
// InteractionGraph
// ---------------------------------------------------------------------------

InteractionGraph::InteractionGraph(std::vector<Vertex> vertices, std::vector<Hyperedge> edges,
                                   std::uint64_t seed)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), seed_(seed) {
    if (vertices_.empty()) throw std::invalid_argument("graph has no vertices");
    bool any_data = false;
    for (const auto& v : vertices_) any_data |= (v.role == VertexRole::Data);
    if (!any_data) throw std::invalid_argument("graph has no data vertices");

    for (const auto& e : edges_) {
        if (e.vertices.empty()) throw std::invalid_argument("edge with no vertices");
        std::set<int> seen;
        for (int v : e.vertices) {
            if (v < 0 || v >= vertex_count())
                throw std::invalid_argument("edge references unknown vertex");
            if (!seen.insert(v).second)
                throw std::invalid_argument("edge vertex list has duplicates");
        }
    }
}

std::vector<int> InteractionGraph::data_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[static_cast<std::size_t>(i)].role == VertexRole::Data) out.push_back(i);
    return out;
}

std::vector<int> InteractionGraph::hidden_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[static_cast<std::size_t>(i)].role == VertexRole::Hidden) out.push_back(i);
    return out;
}

bool InteractionGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> visited(vertices_.size(), false);
    std::vector<int> stack{0};
    visited[0] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges_) {
            if (std::find(e.vertices.begin(), e.vertices.end(), v) == e.vertices.end()) continue;
            for (int w : e.vertices)
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
    }
    return std::all_of(visited.begin(), visited.end(), [](bool b) { return b; });
}

std::string InteractionGraph::to_json_string() const {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : vertices_)
        j["vertices"].push_back(
            {{"id", v.id}, {"role", v.role == VertexRole::Data ? "data" : "hidden"}});
    j["edges"] = json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"vertices", e.vertices}, {"set", e.set_name}});
    j["seed"] = seed_;
    return j.dump(2);
}

InteractionGraph InteractionGraph::from_json_string(const std::string& text) {
    json j = json::parse(text);
    std::vector<Vertex> vertices;
    std::vector<std::string> ids;
    for (const auto& jv : j.at("vertices")) {
        Vertex v;
        v.id = jv.at("id").is_string() ? jv.at("id").get<std::string>()
                                       : std::to_string(jv.at("id").get<int>());
        v.role = jv.contains("role") ? parse_role(jv.at("role").get<std::string>())
                                     : VertexRole::Data;
        ids.push_back(v.id);
        vertices.push_back(std::move(v));
    }
    std::vector<Hyperedge> edges;
    for (const auto& je : j.at("edges")) {
        Hyperedge e;
        for (const auto& jv : je.at("vertices")) {
            if (jv.is_number_integer()) {
                e.vertices.push_back(jv.get<int>());
            } else {
                const auto id = jv.get<std::string>();
                const auto it = std::find(ids.begin(), ids.end(), id);
                if (it == ids.end())
                    throw std::invalid_argument("edge references unknown vertex id: " + id);
                e.vertices.push_back(static_cast<int>(it - ids.begin()));
            }
        }
        e.set_name = je.at("set").get<std::string>();
        edges.push_back(std::move(e));
    }
    const std::uint64_t seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
    InteractionGraph graph(std::move(vertices), std::move(edges), seed);
    if (!graph.is_connected())
        std::cerr << "warning: interaction graph is not connected\n";
    return graph;
}

InteractionGraph InteractionGraph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_string(ss.str());
}

InteractionGraph InteractionGraph::preset(const std::string& name, const std::string& set_name,
                                          std::uint64_t seed) {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    if (name == "edge") {
        n = 2;
        pairs = {{0, 1}};
    } else if (name == "path-3") {
        n = 3;
        pairs = {{0, 1}, {1, 2}};
    } else if (name == "path-4") {
        n = 4;
        pairs = {{0, 1}, {1, 2}, {2, 3}};
    } else if (name == "cycle8-chord") {
        n = 8;
        for (int i = 0; i < 8; ++i) pairs.emplace_back(i, (i + 1) % 8);
        pairs.emplace_back(0, 4);
    } else {
        throw std::invalid_argument("unknown preset graph: " + name);
    }
    std::vector<Vertex> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), VertexRole::Data});
    std::vector<Hyperedge> edges;
    for (auto [a, b] : pairs) edges.push_back({{a, b}, set_name});
    return InteractionGraph(std::move(vertices), std::move(edges), seed);
}

InteractionGraph InteractionGraph::star(int leaf_count, const std::string& set_name,
                                        std::uint64_t seed) {
    if (leaf_count < 1) throw std::invalid_argument("star graph needs at least one leaf");
    std::vector<Vertex> vertices;
    for (int i = 0; i < leaf_count; ++i)
        vertices.push_back({"d" + std::to_string(i), VertexRole::Data});
    vertices.push_back({"center", VertexRole::Hidden});
    std::vector<Hyperedge> edges;
    for (int i = 0; i < leaf_count; ++i) edges.push_back({{i, leaf_count}, set_name});
    return InteractionGraph(std::move(vertices), std::move(edges), seed);
}

// ---------------------------------------------------------------------------
// Interaction sets
// ---------------------------------------------------------------------------

InteractionSet builtin_interaction_set(const std::string& name, std::uint64_t seed) {
    InteractionSet set;
    set.name = name;
    set.seed = seed;
    if (name == "Proj") {
        for (int b = 0; b < 4; ++b) {
            Matrix m = Matrix::Zero(4, 4);
            m(b, b) = 1.0;
            set.edge_terms.push_back(std::move(m));
        }
    } else if (name == "Pauli") {
        const char labels[4] = {'i', 'x', 'y', 'z'};
        for (char a : labels)
            for (char b : labels) set.edge_terms.push_back(kron2(pauli(a), pauli(b)));
    } else if (name == "Rand") {
        NormalStream rng(seed);
        for (int i = 0; i < 7; ++i) set.edge_terms.push_back(random_hermitian_unit_norm(rng, 4));
    } else if (name == "Heis") {
        for (char a : {'x', 'y', 'z'}) set.edge_terms.push_back(kron2(pauli(a), pauli(a)));
    } else if (name == "Ising") {
        set.edge_terms.push_back(kron2(pauli('x'), pauli('x')));
        set.vertex_terms.push_back(pauli('z'));
    } else {
        throw std::invalid_argument("unknown interaction set: " + name);
    }
    return set;
}

// ---------------------------------------------------------------------------
// LabeledDataset
// ---------------------------------------------------------------------------

LabeledDataset::LabeledDataset(std::vector<std::string> yes, std::vector<std::string> no)
    : yes_(std::move(yes)), no_(std::move(no)) {
    if (yes_.empty() && no_.empty()) throw std::invalid_argument("dataset is empty");
    width_ = static_cast<int>(yes_.empty() ? no_.front().size() : yes_.front().size());
    auto validate = [&](const std::string& s) {
        if (static_cast<int>(s.size()) != width_)
            throw std::invalid_argument("dataset strings differ in length");
        for (char c : s)
            if (c != '0' && c != '1')
                throw std::invalid_argument("dataset string contains non-binary character: " + s);
    };
    for (const auto& s : yes_) validate(s);
    for (const auto& s : no_) validate(s);
    std::set<std::string> yes_set(yes_.begin(), yes_.end());
    for (const auto& s : no_)
        if (yes_set.count(s))
            throw std::invalid_argument("dataset string labelled both YES and NO: " + s);
}

LabeledDataset LabeledDataset::parse(std::istream& in, const std::string& origin) {
    std::vector<std::string> yes, no;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string bits, label;
        if (!(ls >> bits)) continue;  // blank line
        if (bits[0] == '#') continue;
        if (!(ls >> label))
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                        ": expected `<bitstring> <YES|NO>`");
        if (label == "YES")
            yes.push_back(bits);
        else if (label == "NO")
            no.push_back(bits);
        else
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                        ": unknown label " + label);
    }
    return LabeledDataset(std::move(yes), std::move(no));
}

LabeledDataset LabeledDataset::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    return parse(in, path);
}

// ---------------------------------------------------------------------------
// Term instances and assembled Hamiltonians
// ---------------------------------------------------------------------------

std::vector<TermInstance> enumerate_term_instances(const InteractionGraph& graph) {
    std::vector<TermInstance> instances;
    std::vector<std::string> sets_seen;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto& edge = graph.edges()[static_cast<std::size_t>(e)];
        const InteractionSet set = builtin_interaction_set(edge.set_name, graph.seed());
        if (static_cast<int>(edge.vertices.size()) != set.arity)
            throw std::invalid_argument("edge arity does not match interaction set " +
                                        edge.set_name);
        for (int t = 0; t < static_cast<int>(set.edge_terms.size()); ++t) {
            TermInstance inst;
            inst.edge_index = e;
            inst.term_index = t;
            inst.targets = edge.vertices;
            inst.matrix = set.edge_terms[static_cast<std::size_t>(t)];
            inst.label = "e" + std::to_string(e) + ":" + set.name + "[" + std::to_string(t) + "]";
            instances.push_back(std::move(inst));
        }
        if (!set.vertex_terms.empty() &&
            std::find(sets_seen.begin(), sets_seen.end(), set.name) == sets_seen.end())
            sets_seen.push_back(set.name);
    }
    // Vertex field terms attach once per vertex for each set that carries them.
    for (const auto& set_name : sets_seen) {
        const InteractionSet set = builtin_interaction_set(set_name, graph.seed());
        for (int v = 0; v < graph.vertex_count(); ++v) {
            for (int t = 0; t < static_cast<int>(set.vertex_terms.size()); ++t) {
                TermInstance inst;
                inst.vertex_index = v;
                inst.term_index = t;
                inst.targets = {v};
                inst.matrix = set.vertex_terms[static_cast<std::size_t>(t)];
                inst.label = "v" + std::to_string(v) + ":" + set.name + "." + std::to_string(t);
                instances.push_back(std::move(inst));
            }
        }
    }
    return instances;
}

TrainedClassifier::TrainedClassifier(InteractionGraph graph, std::pair<double, double> weight_range)
    : graph_(std::move(graph)),
      instances_(enumerate_term_instances(graph_)),
      weight_range_(weight_range) {
    if (weight_range_.first >= weight_range_.second)
        throw std::invalid_argument("weight range must be a proper interval");
    coefficients_.assign(instances_.size(), std::numeric_limits<double>::quiet_NaN());
}

void TrainedClassifier::set_coefficient(int instance, double value) {
    if (instance < 0 || instance >= instance_count())
        throw std::invalid_argument("instance index out of range");
    if (value < weight_range_.first - 1e-12 || value > weight_range_.second + 1e-12)
        throw std::invalid_argument("coefficient outside the configured weight range");
    coefficients_[static_cast<std::size_t>(instance)] = value;
}

void TrainedClassifier::set_coefficients(const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != instance_count())
        throw std::invalid_argument("coefficient count mismatch");
    for (int i = 0; i < instance_count(); ++i) set_coefficient(i, values[static_cast<std::size_t>(i)]);
}

double TrainedClassifier::coefficient(int instance) const {
    return coefficients_.at(static_cast<std::size_t>(instance));
}

bool TrainedClassifier::complete() const {
    return std::none_of(coefficients_.begin(), coefficients_.end(),
                        [](double c) { return std::isnan(c); });
}

WeightedTermList assemble_hamiltonian(const TrainedClassifier& classifier) {
    if (!classifier.complete())
        throw std::invalid_argument("classifier has unassigned coefficients");
    WeightedTermList h;
    for (int i = 0; i < classifier.instance_count(); ++i) {
        const auto& inst = classifier.instances()[static_cast<std::size_t>(i)];
        h.add(classifier.coefficient(i), LocalOperator::dense(inst.matrix, inst.targets));
    }
    return h;
}

LocalOperator datum_projector(const InteractionGraph& graph, const std::string& datum) {
    const std::vector<int> data = graph.data_vertices();
    if (datum.size() != data.size())
        throw std::invalid_argument("datum length does not match the data register");
    return LocalOperator::basis_projector(data, datum);
}

WeightedTermList data_projector(const InteractionGraph& graph, const LabeledDataset& dataset,
                                DataSide side) {
    const auto& strings = side == DataSide::Yes ? dataset.yes() : dataset.no();
    WeightedTermList projector;
    if (strings.empty()) {
        std::cerr << "warning: data projector over an empty side is the zero operator\n";
        return projector;
    }
    for (const auto& l : strings) projector.add(1.0, datum_projector(graph, l));
    return projector;
}

}  // namespace hamclass
