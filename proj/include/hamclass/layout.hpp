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

#include "hamclass/model.hpp"

namespace hamclass {

enum class LayoutMode { PerTerm, Qudit };

/// How term instances are partitioned into qudit control groups.
struct GroupingRule {
    enum class Kind { Global, PerEdge, Tuples } kind = Kind::Global;
    int tuple_size = 3;

    /// "all" -> one global group, "edge" -> one group per edge (vertex field
    /// terms form their own group), an integer -> tuples of that size.
    static GroupingRule parse(const std::string& text);
    std::string describe() const;
};

struct ControlGroup {
    std::vector<int> instance_indices;
    std::vector<int> control_qubits;
};

/// Maps term instances to control qubits. Per-term mode assigns one control
/// qubit per instance, so the training Hamiltonian blocks realize every
/// subset sum of interactions. Qudit mode packs a group of d instances into
/// ceil(log2(d+1)) control qubits whose patterns select at most one
/// interaction; pattern 0 and unmapped patterns act as the zero block.
class TrainingLayout {
  public:
    TrainingLayout(LayoutMode mode, int vertex_count, std::vector<ControlGroup> groups,
                   double delta = 1.0);

    LayoutMode mode() const { return mode_; }
    double delta() const { return delta_; }
    const std::vector<ControlGroup>& groups() const { return groups_; }

    int vertex_count() const { return vertex_count_; }
    int control_qubit_count() const { return control_count_; }
    int total_qubits() const { return vertex_count_ + control_count_; }
    int instance_count() const { return static_cast<int>(instance_group_.size()); }

    /// All control qubit indices, ascending.
    std::vector<int> control_qubits() const;
    int group_of(int instance) const;

    /// Control qubits and the basis pattern that switch instance `i` on.
    std::pair<std::vector<int>, std::vector<bool>> activation_pattern(int instance) const;

    /// Whether control pattern `bits` over a group's qubits activates the
    /// given instance of that group.
    bool pattern_activates(int group, index_t pattern_value, int instance) const;

  private:
    LayoutMode mode_;
    int vertex_count_;
    std::vector<ControlGroup> groups_;
    std::vector<int> instance_group_;   // instance -> group index
    std::vector<int> instance_slot_;    // instance -> position within group
    int control_count_ = 0;
    double delta_ = 1.0;
};

/// Qubit counts without building anything (no cap applied), for layout
/// accounting across large benchmark graphs.
struct LayoutCounts {
    int total = 0;
    int controls = 0;
    int instances = 0;
};
LayoutCounts count_training_qubits(const InteractionGraph& graph, LayoutMode mode,
                                   GroupingRule grouping = {});

TrainingLayout build_training_layout(const InteractionGraph& graph,
                                     const std::vector<TermInstance>& instances, LayoutMode mode,
                                     GroupingRule grouping = {}, int qubit_cap = kQubitCap,
                                     double delta = 1.0);

/// H_c = sum_i |activation pattern_i><pattern_i| (x) h_i, every instance at
/// unit strength.
WeightedTermList controlled_family(const TrainingLayout& layout,
                                   const std::vector<TermInstance>& instances);

}  // namespace hamclass
