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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hamclass/local_operator.hpp"

namespace hamclass {

enum class VertexRole { Data, Hidden };

struct Vertex {
    std::string id;
    VertexRole role = VertexRole::Data;
};

/// Hyperedge over vertex indices, carrying the name of its interaction set.
struct Hyperedge {
    std::vector<int> vertices;
    std::string set_name;
};

/// Interaction hypergraph. Vertex order is significant: dataset bitstrings
/// map positionally onto the ordered data vertices, and vertex index equals
/// qubit index in every register built from the graph.
class InteractionGraph {
  public:
    InteractionGraph(std::vector<Vertex> vertices, std::vector<Hyperedge> edges,
                     std::uint64_t seed = 0);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    std::uint64_t seed() const { return seed_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::vector<int> data_vertices() const;
    std::vector<int> hidden_vertices() const;

    bool is_connected() const;

    std::string to_json_string() const;
    static InteractionGraph from_json_string(const std::string& text);
    static InteractionGraph load(const std::string& path);

    /// Built-in benchmark graphs: "edge" (2 vertices), "path-3", "path-4",
    /// "cycle8-chord" (8-cycle plus one chord). All vertices are data
    /// vertices and every edge carries `set_name`.
    static InteractionGraph preset(const std::string& name, const std::string& set_name,
                                   std::uint64_t seed = 0);

    /// Star graph with `leaf_count` data leaves around one hidden center;
    /// used by the color classification tasks.
    static InteractionGraph star(int leaf_count, const std::string& set_name,
                                 std::uint64_t seed = 0);

  private:
    std::vector<Vertex> vertices_;
    std::vector<Hyperedge> edges_;
    std::uint64_t seed_ = 0;
};

/// A named family of Hermitian interaction matrices shared by edges.
/// Edge terms act on `arity` qubits; vertex terms (used by the Ising set)
/// are single-qubit fields attached once per vertex.
struct InteractionSet {
    std::string name;
    int arity = 2;
    std::vector<Matrix> edge_terms;
    std::vector<Matrix> vertex_terms;
    std::uint64_t seed = 0;
};

/// Built-in sets: Proj (4 diagonal two-qubit projectors), Pauli (all 16
/// two-qubit Pauli products, identity included), Rand (7 seeded random
/// Hermitian 4x4 matrices rescaled to spectral norm 1), Heis (xx, yy, zz),
/// Ising (xx per edge plus a z field per vertex). Unknown names throw.
InteractionSet builtin_interaction_set(const std::string& name, std::uint64_t seed = 0);

/// YES/NO labelled bitstrings over the data register.
class LabeledDataset {
  public:
    LabeledDataset(std::vector<std::string> yes, std::vector<std::string> no);

    const std::vector<std::string>& yes() const { return yes_; }
    const std::vector<std::string>& no() const { return no_; }
    int width() const { return width_; }

    /// One record per line: `<bitstring> <YES|NO>`.
    static LabeledDataset load(const std::string& path);
    static LabeledDataset parse(std::istream& in, const std::string& origin);

  private:
    std::vector<std::string> yes_, no_;
    int width_ = 0;
};

/// One trainable coupling: a Hermitian matrix placed on an edge's vertices
/// (or a field on one vertex).
struct TermInstance {
    int edge_index = -1;    // -1 for vertex field terms
    int vertex_index = -1;  // -1 for edge terms
    int term_index = 0;
    std::vector<int> targets;
    Matrix matrix;
    std::string label;
};

/// Edge instances first (edge-major, set order within each edge), then
/// vertex field instances. This order also fixes control-qubit assignment.
std::vector<TermInstance> enumerate_term_instances(const InteractionGraph& graph);

/// Coupling coefficients a_{e,h} for every term instance of a graph.
class TrainedClassifier {
  public:
    TrainedClassifier(InteractionGraph graph, std::pair<double, double> weight_range = {-1.0, 1.0});

    const InteractionGraph& graph() const { return graph_; }
    const std::vector<TermInstance>& instances() const { return instances_; }
    std::pair<double, double> weight_range() const { return weight_range_; }

    int instance_count() const { return static_cast<int>(instances_.size()); }
    void set_coefficient(int instance, double value);
    void set_coefficients(const std::vector<double>& values);
    double coefficient(int instance) const;
    const std::vector<double>& coefficients() const { return coefficients_; }
    bool complete() const;

  private:
    InteractionGraph graph_;
    std::vector<TermInstance> instances_;
    std::vector<double> coefficients_;
    std::pair<double, double> weight_range_;
};

/// H = sum over instances of a_{e,h} * h placed on its edge. Throws if any
/// coefficient was never assigned.
WeightedTermList assemble_hamiltonian(const TrainedClassifier& classifier);

enum class DataSide { Yes, No };

/// Pi = sum_l |l><l| on the data register, one rank-one basis projector per
/// string (applied 1-locally through the factored operator form). An empty
/// side yields the zero operator and a warning on stderr.
WeightedTermList data_projector(const InteractionGraph& graph, const LabeledDataset& dataset,
                                DataSide side);

/// Rank-one projector |l><l| on the data register for a single datum.
LocalOperator datum_projector(const InteractionGraph& graph, const std::string& datum);

}  // namespace hamclass
