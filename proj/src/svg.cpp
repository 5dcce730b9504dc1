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

#include "hamclass/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hamclass {

namespace {
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 18.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 46.0;

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string format_tick(double v) {
    std::ostringstream ss;
    ss.precision(4);
    ss << v;
    return ss.str();
}
}  // namespace

SvgPlot::SvgPlot(double x_min, double x_max, double y_min, double y_max, int width, int height)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), width_(width), height_(height) {
    if (!(x_max_ > x_min_) || !(y_max_ > y_min_))
        throw std::invalid_argument("plot ranges must be non-empty");
}

void SvgPlot::set_labels(const std::string& x, const std::string& y) {
    x_label_ = x;
    y_label_ = y;
}

double SvgPlot::to_px_x(double x) const {
    const double span = width_ - kMarginLeft - kMarginRight;
    return kMarginLeft + (x - x_min_) / (x_max_ - x_min_) * span;
}

double SvgPlot::to_px_y(double y) const {
    const double span = height_ - kMarginTop - kMarginBottom;
    return height_ - kMarginBottom - (y - y_min_) / (y_max_ - y_min_) * span;
}

void SvgPlot::add_comment(const std::string& text) { comments_.push_back(text); }

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& points,
                       const std::string& color, double stroke_width, bool dashed) {
    if (points.empty()) return;
    std::ostringstream ss;
    ss << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke_width
       << "\"";
    if (dashed) ss << " stroke-dasharray=\"6,4\"";
    ss << " points=\"";
    for (const auto& [x, y] : points) ss << to_px_x(x) << ',' << to_px_y(y) << ' ';
    ss << "\"/>";
    body_.push_back(ss.str());
}

void SvgPlot::scatter(double x, double y, const std::string& fill, double radius) {
    std::ostringstream ss;
    ss << "<circle cx=\"" << to_px_x(x) << "\" cy=\"" << to_px_y(y) << "\" r=\"" << radius
       << "\" fill=\"" << fill << "\"/>";
    body_.push_back(ss.str());
}

void SvgPlot::vertical_segment(double x, double y0, double y1, const std::string& color,
                               double stroke_width) {
    std::ostringstream ss;
    ss << "<line x1=\"" << to_px_x(x) << "\" y1=\"" << to_px_y(y0) << "\" x2=\"" << to_px_x(x)
       << "\" y2=\"" << to_px_y(y1) << "\" stroke=\"" << color << "\" stroke-width=\""
       << stroke_width << "\"/>";
    body_.push_back(ss.str());
}

void SvgPlot::horizontal_band(double y0, double y1, const std::string& fill, double opacity) {
    const double top = to_px_y(std::max(y0, y1));
    const double bottom = to_px_y(std::min(y0, y1));
    std::ostringstream ss;
    ss << "<rect x=\"" << to_px_x(x_min_) << "\" y=\"" << top << "\" width=\""
       << to_px_x(x_max_) - to_px_x(x_min_) << "\" height=\"" << bottom - top << "\" fill=\""
       << fill << "\" fill-opacity=\"" << opacity << "\"/>";
    body_.push_back(ss.str());
}

void SvgPlot::horizontal_line(double y, const std::string& color, bool dashed) {
    std::ostringstream ss;
    ss << "<line x1=\"" << to_px_x(x_min_) << "\" y1=\"" << to_px_y(y) << "\" x2=\""
       << to_px_x(x_max_) << "\" y2=\"" << to_px_y(y) << "\" stroke=\"" << color
       << "\" stroke-width=\"1\"";
    if (dashed) ss << " stroke-dasharray=\"4,4\"";
    ss << "/>";
    body_.push_back(ss.str());
}

void SvgPlot::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
        << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n";
    for (const auto& c : comments_) out << "<!-- " << escape(c) << " -->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes with four ticks each.
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << height_ - kMarginBottom << "\" x2=\""
        << width_ - kMarginRight << "\" y2=\"" << height_ - kMarginBottom
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << height_ - kMarginBottom << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_min_ + (x_max_ - x_min_) * i / 4.0;
        const double yv = y_min_ + (y_max_ - y_min_) * i / 4.0;
        out << "<text x=\"" << to_px_x(xv) << "\" y=\"" << height_ - kMarginBottom + 16
            << "\" font-size=\"11\" text-anchor=\"middle\">" << format_tick(xv) << "</text>\n";
        out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << to_px_y(yv) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << format_tick(yv) << "</text>\n";
    }
    if (!title_.empty())
        out << "<text x=\"" << width_ / 2.0 << "\" y=\"18\" font-size=\"14\" "
            << "text-anchor=\"middle\">" << escape(title_) << "</text>\n";
    if (!x_label_.empty())
        out << "<text x=\"" << width_ / 2.0 << "\" y=\"" << height_ - 10
            << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n";
    if (!y_label_.empty())
        out << "<text x=\"14\" y=\"" << height_ / 2.0 << "\" font-size=\"12\" "
            << "text-anchor=\"middle\" transform=\"rotate(-90 14 " << height_ / 2.0 << ")\">"
            << escape(y_label_) << "</text>\n";

    for (const auto& e : body_) out << e << "\n";
    out << "</svg>\n";
}

}  // namespace hamclass
