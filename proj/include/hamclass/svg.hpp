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

namespace hamclass {

/// Minimal SVG scatter/line plot with linear axes; enough for the three
/// result figures without pulling in a plotting dependency.
class SvgPlot {
  public:
    SvgPlot(double x_min, double x_max, double y_min, double y_max, int width = 760,
            int height = 480);

    void set_title(const std::string& title) { title_ = title; }
    void set_labels(const std::string& x, const std::string& y);

    void add_comment(const std::string& text);
    void polyline(const std::vector<std::pair<double, double>>& points, const std::string& color,
                  double stroke_width = 1.5, bool dashed = false);
    void scatter(double x, double y, const std::string& fill, double radius = 2.5);
    void vertical_segment(double x, double y0, double y1, const std::string& color,
                          double stroke_width = 0.7);
    void horizontal_band(double y0, double y1, const std::string& fill, double opacity = 0.18);
    void horizontal_line(double y, const std::string& color, bool dashed = true);

    void save(const std::string& path) const;

  private:
    double to_px_x(double x) const;
    double to_px_y(double y) const;

    double x_min_, x_max_, y_min_, y_max_;
    int width_, height_;
    std::string title_, x_label_, y_label_;
    std::vector<std::string> body_;
    std::vector<std::string> comments_;
};

}  // namespace hamclass
