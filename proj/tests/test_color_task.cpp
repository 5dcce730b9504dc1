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

#include <algorithm>
#include <iostream>
#include <sstream>

#include "hamclass/color_task.hpp"

using namespace hamclass;

TEST_SUITE_BEGIN("color-task");

TEST_CASE("the embedded 9-bit lists carry the ten-color red and blue sets") {
    const auto dataset = color_training_data(9);
    REQUIRE(dataset.yes().size() == 10);  // blue
    REQUIRE(dataset.no().size() == 10);   // red
    CHECK(dataset.no()[0] == "110000000");
    CHECK(dataset.no()[1] == "011000000");
    CHECK(dataset.yes()[0] == "000001100");
    CHECK(dataset.yes()[1] == "001001110");
    // Blue shades carry more blue than red channel weight.
    for (const auto& blue : dataset.yes()) {
        const int r = static_cast<int>(basis_index(blue.substr(0, 3)));
        const int b = static_cast<int>(basis_index(blue.substr(6, 3)));
        CHECK(b >= r);
    }
}

TEST_CASE("the 6-bit lists normalize the short source entry with a warning") {
    std::ostringstream captured;
    auto* old = std::cerr.rdbuf(captured.rdbuf());
    const auto dataset = color_training_data(6);
    std::cerr.rdbuf(old);

    REQUIRE(dataset.yes().size() == 5);
    REQUIRE(dataset.no().size() == 5);
    CHECK(std::find(dataset.yes().begin(), dataset.yes().end(), "000100") != dataset.yes().end());
    CHECK(captured.str().find("00010") != std::string::npos);
    CHECK(dataset.no()[0] == "110001");
}

TEST_CASE("the color graph is a star with one hidden center and Proj couplings") {
    for (int bits : {6, 9}) {
        const auto graph = color_graph(bits);
        CHECK(graph.vertex_count() == bits + 1);
        CHECK(graph.edge_count() == bits);
        CHECK(graph.hidden_vertices() == std::vector<int>{bits});
        for (const auto& e : graph.edges()) {
            CHECK(e.set_name == "Proj");
            CHECK(std::find(e.vertices.begin(), e.vertices.end(), bits) != e.vertices.end());
        }
        CHECK(graph.is_connected());
    }
    CHECK_THROWS_AS(color_graph(5), std::invalid_argument);
}

TEST_CASE("a quick 6-bit run emits one hue-sorted record per color") {
    TrainingOptions options;
    options.mode = LayoutMode::Qudit;
    options.anneal.steps = 10;
    options.anneal.trotter = 8;
    const auto result = run_color_task(6, options);
    REQUIRE(result.records.size() == 64);

    double previous = -1.0;
    int labelled = 0;
    for (const auto& r : result.records) {
        CHECK(r.hue >= previous - 1e-12);
        previous = std::max(previous, r.hue);
        if (!r.label.empty()) ++labelled;
        CHECK(r.overlap_p >= 0.0);
        CHECK(!r.predicted.empty());
    }
    CHECK(labelled == 10);
}

TEST_CASE("per-term mode is refused for the color register") {
    TrainingOptions options;
    options.mode = LayoutMode::PerTerm;
    CHECK_THROWS_AS(run_color_task(6, options), std::invalid_argument);
}

TEST_SUITE_END();
