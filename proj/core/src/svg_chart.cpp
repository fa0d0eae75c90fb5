/*
 * Copyright 2026 The khist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace khist::detail {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 150;
constexpr double kMarginTop = 40;
constexpr double kMarginBottom = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

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

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<ChartSeries>& series) {
    double x_min = 0, x_max = 1, y_max = 1;
    bool any_point = false;
    for (const ChartSeries& s : series) {
        for (auto [x, y] : s.points) {
            if (!any_point) {
                x_min = x_max = x;
                y_max = y;
                any_point = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_max = std::max(y_max, y);
            }
        }
    }
    if (x_max == x_min) {
        x_min -= 1;
        x_max += 1;
    }
    if (y_max <= 0) y_max = 1;
    y_max *= 1.05;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) { return kMarginTop + plot_h - y / y_max * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\" "
        << "font-family=\"sans-serif\">" << escape(title) << "</text>\n";

    // Axes
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft << "\" y2=\""
        << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";

    // Y ticks and gridlines
    for (int t = 0; t <= 5; ++t) {
        const double v = y_max * t / 5.0;
        const double y = sy(v);
        svg << "<line x1=\"" << kMarginLeft - 4 << "\" y1=\"" << fmt(y) << "\" x2=\"" << kMarginLeft + plot_w
            << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\" "
            << "font-size=\"11\" font-family=\"sans-serif\">" << fmt_tick(v) << "</text>\n";
    }

    // X ticks: integer positions when the span is small, else 8 divisions
    const double span = x_max - x_min;
    const double x_step = span <= 12 ? 1.0 : std::ceil(span / 8.0);
    for (double v = std::ceil(x_min); v <= x_max + 1e-9; v += x_step) {
        const double x = sx(v);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << kMarginTop + plot_h + 4 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << kMarginTop + plot_h + 18 << "\" text-anchor=\"middle\" "
            << "font-size=\"11\" font-family=\"sans-serif\">" << fmt_tick(v) << "</text>\n";
    }

    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 14
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" << escape(x_label)
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"12\" "
        << "font-family=\"sans-serif\" transform=\"rotate(-90 18 " << kMarginTop + plot_h / 2 << ")\">"
        << escape(y_label) << "</text>\n";

    // Series: polyline (when more than one point) plus markers
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        if (series[s].points.size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (auto [x, y] : series[s].points) svg << fmt(sx(x)) << "," << fmt(sy(y)) << " ";
            svg << "\"/>\n";
        }
        for (auto [x, y] : series[s].points) {
            svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y)) << "\" r=\"2.5\" fill=\"" << color
                << "\"/>\n";
        }
        const double ly = kMarginTop + 14 + 18 * static_cast<double>(s);
        svg << "<line x1=\"" << kMarginLeft + plot_w + 12 << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
            << kMarginLeft + plot_w + 34 << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << kMarginLeft + plot_w + 40 << "\" y=\"" << fmt(ly) << "\" font-size=\"11\" "
            << "font-family=\"sans-serif\">" << escape(series[s].name) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace khist::detail
