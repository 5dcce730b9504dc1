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

#include "hamclass/layout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamclass {

namespace {

int control_bits_for(int group_size) {
    // d interactions need patterns 1..d, so ceil(log2(d+1)) qubits.
    int bits = 0;
    while ((index_t{1} << bits) < static_cast<index_t>(group_size) + 1) ++bits;
    return bits;
}

std::vector<std::vector<int>> partition_instances(const std::vector<TermInstance>& instances,
                                                  LayoutMode mode, GroupingRule grouping) {
    std::vector<std::vector<int>> groups;
    if (mode == LayoutMode::PerTerm) {
        for (int i = 0; i < static_cast<int>(instances.size()); ++i) groups.push_back({i});
        return groups;
    }
    switch (grouping.kind) {
        case GroupingRule::Kind::Global: {
            std::vector<int> all(instances.size());
            for (int i = 0; i < static_cast<int>(instances.size()); ++i) all[static_cast<std::size_t>(i)] = i;
            if (!all.empty()) groups.push_back(std::move(all));
            break;
        }
        case GroupingRule::Kind::PerEdge: {
            // Instances are edge-major, so contiguous runs share an edge;
            // trailing vertex field terms form one group of their own.
            std::vector<int> current;
            int current_edge = -2;
            for (int i = 0; i < static_cast<int>(instances.size()); ++i) {
                const int e = instances[static_cast<std::size_t>(i)].edge_index;
                const int key = e >= 0 ? e : -1;
                if (key != current_edge && !current.empty()) {
                    groups.push_back(current);
                    current.clear();
                }
                current_edge = key;
                current.push_back(i);
            }
            if (!current.empty()) groups.push_back(current);
            break;
        }
        case GroupingRule::Kind::Tuples: {
            if (grouping.tuple_size < 1)
                throw std::invalid_argument("tuple size must be positive");
            std::vector<int> current;
            for (int i = 0; i < static_cast<int>(instances.size()); ++i) {
                current.push_back(i);
                if (static_cast<int>(current.size()) == grouping.tuple_size) {
                    groups.push_back(current);
                    current.clear();
                }
            }
            if (!current.empty()) groups.push_back(current);
            break;
        }
    }
    return groups;
}

}  // namespace

GroupingRule GroupingRule::parse(const std::string& text) {
    GroupingRule rule;
    if (text == "all" || text == "global") {
        rule.kind = Kind::Global;
    } else if (text == "edge") {
        rule.kind = Kind::PerEdge;
    } else {
        try {
            rule.tuple_size = std::stoi(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("grouping must be `all`, `edge`, or a tuple size");
        }
        rule.kind = Kind::Tuples;
    }
    return rule;
}

std::string GroupingRule::describe() const {
    switch (kind) {
        case Kind::Global: return "all";
        case Kind::PerEdge: return "edge";
        case Kind::Tuples: return std::to_string(tuple_size);
    }
    return "?";
}

TrainingLayout::TrainingLayout(LayoutMode mode, int vertex_count, std::vector<ControlGroup> groups,
                               double delta)
    : mode_(mode), vertex_count_(vertex_count), groups_(std::move(groups)), delta_(delta) {
    if (delta_ < 1.0) throw std::invalid_argument("delta must be >= 1");
    int instance_total = 0;
    for (const auto& g : groups_) instance_total += static_cast<int>(g.instance_indices.size());
    instance_group_.assign(static_cast<std::size_t>(instance_total), -1);
    instance_slot_.assign(static_cast<std::size_t>(instance_total), -1);
    for (int g = 0; g < static_cast<int>(groups_.size()); ++g) {
        const auto& group = groups_[static_cast<std::size_t>(g)];
        if (mode_ == LayoutMode::PerTerm && group.control_qubits.size() != 1)
            throw std::invalid_argument("per-term layout requires one control qubit per instance");
        for (int s = 0; s < static_cast<int>(group.instance_indices.size()); ++s) {
            const int inst = group.instance_indices[static_cast<std::size_t>(s)];
            if (inst < 0 || inst >= instance_total || instance_group_[static_cast<std::size_t>(inst)] != -1)
                throw std::invalid_argument("groups must partition the term instances");
            instance_group_[static_cast<std::size_t>(inst)] = g;
            instance_slot_[static_cast<std::size_t>(inst)] = s;
        }
        control_count_ += static_cast<int>(group.control_qubits.size());
    }
    for (int g : instance_group_)
        if (g < 0) throw std::invalid_argument("groups must cover every term instance");
}

std::vector<int> TrainingLayout::control_qubits() const {
    std::vector<int> out;
    for (const auto& g : groups_)
        out.insert(out.end(), g.control_qubits.begin(), g.control_qubits.end());
    std::sort(out.begin(), out.end());
    return out;
}

int TrainingLayout::group_of(int instance) const {
    return instance_group_.at(static_cast<std::size_t>(instance));
}

std::pair<std::vector<int>, std::vector<bool>> TrainingLayout::activation_pattern(
    int instance) const {
    const int g = group_of(instance);
    const auto& group = groups_[static_cast<std::size_t>(g)];
    const int slot = instance_slot_.at(static_cast<std::size_t>(instance));
    const int m = static_cast<int>(group.control_qubits.size());
    std::vector<bool> pattern(static_cast<std::size_t>(m), false);
    if (mode_ == LayoutMode::PerTerm) {
        pattern[0] = true;
    } else {
        const index_t value = static_cast<index_t>(slot) + 1;
        for (int i = 0; i < m; ++i)
            pattern[static_cast<std::size_t>(i)] = (value >> (m - 1 - i)) & 1;
    }
    return {group.control_qubits, pattern};
}

bool TrainingLayout::pattern_activates(int group, index_t pattern_value, int instance) const {
    if (group_of(instance) != group) return false;
    const int slot = instance_slot_.at(static_cast<std::size_t>(instance));
    if (mode_ == LayoutMode::PerTerm) return pattern_value == 1;
    return pattern_value == static_cast<index_t>(slot) + 1;
}

LayoutCounts count_training_qubits(const InteractionGraph& graph, LayoutMode mode,
                                   GroupingRule grouping) {
    const auto instances = enumerate_term_instances(graph);
    const auto partitions = partition_instances(instances, mode, grouping);
    LayoutCounts counts;
    counts.instances = static_cast<int>(instances.size());
    for (const auto& p : partitions)
        counts.controls += mode == LayoutMode::PerTerm
                               ? 1
                               : control_bits_for(static_cast<int>(p.size()));
    counts.total = graph.vertex_count() + counts.controls;
    return counts;
}

TrainingLayout build_training_layout(const InteractionGraph& graph,
                                     const std::vector<TermInstance>& instances, LayoutMode mode,
                                     GroupingRule grouping, int qubit_cap, double delta) {
    const auto partitions = partition_instances(instances, mode, grouping);
    std::vector<ControlGroup> groups;
    int next_qubit = graph.vertex_count();
    for (const auto& p : partitions) {
        ControlGroup g;
        g.instance_indices = p;
        const int bits =
            mode == LayoutMode::PerTerm ? 1 : control_bits_for(static_cast<int>(p.size()));
        for (int b = 0; b < bits; ++b) g.control_qubits.push_back(next_qubit++);
        groups.push_back(std::move(g));
    }
    if (next_qubit > qubit_cap)
        throw std::invalid_argument("training layout needs " + std::to_string(next_qubit) +
                                    " qubits, above the cap of " + std::to_string(qubit_cap));
    return TrainingLayout(mode, graph.vertex_count(), std::move(groups), delta);
}

WeightedTermList controlled_family(const TrainingLayout& layout,
                                   const std::vector<TermInstance>& instances) {
    if (static_cast<int>(instances.size()) != layout.instance_count())
        throw std::invalid_argument("layout does not match the instance list");
    WeightedTermList family;
    for (int i = 0; i < layout.instance_count(); ++i) {
        auto [controls, pattern] = layout.activation_pattern(i);
        const auto& inst = instances[static_cast<std::size_t>(i)];
        family.add(1.0, LocalOperator::controlled(controls, pattern, inst.matrix, inst.targets));
    }
    return family;
}

}  // namespace hamclass
