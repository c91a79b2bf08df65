#include "epsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "epsim/csv.hpp"

namespace eps {

namespace {

constexpr int kMarginLeft = 70, kMarginRight = 20, kMarginTop = 40, kMarginBottom = 50;

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double m = 0.04 * (hi - lo);
        lo -= m;
        hi += m;
    }
};

std::string num(double v) { return format_double(v); }

void open_svg(std::ofstream& out, int w, int h, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
}

}  // namespace

void write_line_plot_svg(const std::string& path, const PlotSpec& spec) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);

    Range rx, ry;
    for (const Series& s : spec.series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            rx.add(spec.log_x ? std::log10(s.x[i]) : s.x[i]);
            ry.add(s.y[i]);
        }
    for (double m : spec.v_markers) rx.add(spec.log_x ? std::log10(m) : m);
    rx.pad();
    ry.pad();

    const double pw = spec.width - kMarginLeft - kMarginRight;
    const double ph = spec.height - kMarginTop - kMarginBottom;
    const auto px = [&](double x) {
        const double v = spec.log_x ? std::log10(x) : x;
        return kMarginLeft + pw * (v - rx.lo) / (rx.hi - rx.lo);
    };
    const auto py = [&](double y) {
        return kMarginTop + ph * (1.0 - (y - ry.lo) / (ry.hi - ry.lo));
    };

    open_svg(out, spec.width, spec.height, spec.title);
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

    // axis extreme labels
    out << "<text x=\"" << kMarginLeft << "\" y=\"" << spec.height - 28
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(spec.log_x ? std::pow(10, rx.lo) : rx.lo) << "</text>\n"
        << "<text x=\"" << spec.width - kMarginRight << "\" y=\"" << spec.height - 28
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(spec.log_x ? std::pow(10, rx.hi) : rx.hi) << "</text>\n"
        << "<text x=\"6\" y=\"" << kMarginTop + 10
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(ry.hi) << "</text>\n"
        << "<text x=\"6\" y=\"" << kMarginTop + ph
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(ry.lo) << "</text>\n"
        << "<text x=\"" << kMarginLeft + pw / 2 << "\" y=\"" << spec.height - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << spec.x_label << "</text>\n"
        << "<text x=\"14\" y=\"" << kMarginTop - 8
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << spec.y_label << "</text>\n";

    for (double m : spec.v_markers)
        out << "<line x1=\"" << px(m) << "\" y1=\"" << kMarginTop << "\" x2=\"" << px(m)
            << "\" y2=\"" << kMarginTop + ph
            << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";

    int legend_y = kMarginTop + 14;
    for (const Series& s : spec.series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<text x=\"" << kMarginLeft + pw - 150 << "\" y=\"" << legend_y
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << s.color << "\">"
                << s.label << "</text>\n";
            legend_y += 16;
        }
    }
    out << "</svg>\n";
}

void write_portrait_svg(const std::string& path, const Portrait& portrait,
                        const PortraitSpec& spec, const std::string& title) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);

    const int w = 640, h = 640;
    const double pw = w - kMarginLeft - kMarginRight;
    const double ph = h - kMarginTop - kMarginBottom;
    const auto px = [&](double x) {
        return kMarginLeft + pw * (x - spec.re_min) / (spec.re_max - spec.re_min);
    };
    const auto py = [&](double y) {
        return kMarginTop + ph * (1.0 - (y - spec.im_min) / (spec.im_max - spec.im_min));
    };

    double vmax = 0.0;
    for (const auto& f : portrait.field) vmax = std::max(vmax, std::hypot(f[0], f[1]));
    const double arrow = 0.9 * std::min(pw / spec.n_re, ph / spec.n_im);

    open_svg(out, w, h, title);
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n"
        << "<text x=\"" << kMarginLeft + pw / 2 << "\" y=\"" << h - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">Re A</text>\n"
        << "<text x=\"14\" y=\"" << kMarginTop - 8
        << "\" font-family=\"sans-serif\" font-size=\"13\">Im A</text>\n";

    for (std::size_t i = 0; i < portrait.grid.size(); ++i) {
        const double mag = std::hypot(portrait.field[i][0], portrait.field[i][1]);
        if (mag == 0.0 || vmax == 0.0) continue;
        const double len = arrow * (0.25 + 0.75 * mag / vmax);
        const double ux = portrait.field[i][0] / mag, uy = portrait.field[i][1] / mag;
        const double x0 = px(portrait.grid[i].re), y0 = py(portrait.grid[i].im);
        const double x1 = x0 + len * ux, y1 = y0 - len * uy;
        // shaft + simple head
        out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
            << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        const double hx = -0.25 * len, hy = 0.18 * len;
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\""
            << x1 + hx * ux - hy * uy << "\" y2=\"" << y1 - (hx * uy + hy * ux)
            << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n"
            << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\""
            << x1 + hx * ux + hy * uy << "\" y2=\"" << y1 - (hx * uy - hy * ux)
            << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
    }

    for (const RatioTrajectory& t : portrait.trajectories) {
        out << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < t.points.size(); ++i) {
            if (t.points[i].re < spec.re_min || t.points[i].re > spec.re_max ||
                t.points[i].im < spec.im_min || t.points[i].im > spec.im_max) {
                out << "\"/>\n<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.2\" points=\"";
                continue;
            }
            out << px(t.points[i].re) << ',' << py(t.points[i].im) << ' ';
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace eps
