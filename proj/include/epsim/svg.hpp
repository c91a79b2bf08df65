// svg.hpp — Minimal self-contained SVG rendering (no external renderer).

#pragma once

#include <string>
#include <vector>

#include "epsim/riccati.hpp"

namespace eps {

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x, y;
};

struct PlotSpec {
    std::string title;
    std::string x_label, y_label;
    std::vector<Series> series;
    std::vector<double> v_markers;  // dashed vertical reference lines
    bool log_x = false;
    int width = 860, height = 540;
};

void write_line_plot_svg(const std::string& path, const PlotSpec& spec);

void write_portrait_svg(const std::string& path, const Portrait& portrait,
                        const PortraitSpec& spec, const std::string& title);

}  // namespace eps
