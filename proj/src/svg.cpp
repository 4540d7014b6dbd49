#include "riskregion/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace riskregion {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Range {
    double lo = 0.0, hi = 1.0;
    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad(double frac) {
        double span = hi - lo;
        if (span <= 0.0) span = std::max(1e-6, std::abs(hi));
        lo -= span * frac;
        hi += span * frac;
    }
};

Range fresh_range() {
    Range r;
    r.lo = std::numeric_limits<double>::infinity();
    r.hi = -std::numeric_limits<double>::infinity();
    return r;
}

// step of the form 1/2/2.5/5 * 10^k giving 4-6 ticks
double tick_step(const Range& r) {
    const double target = (r.hi - r.lo) / 4.5;
    const double mag = std::pow(10.0, std::floor(std::log10(target)));
    for (double m : {1.0, 2.0, 2.5, 5.0})
        if (m * mag >= target) return m * mag;
    return 10.0 * mag;
}

// linear map from data range to pixel span
struct Scale {
    Range r;
    double px0 = 0.0, px1 = 1.0;  // px1 < px0 flips the axis (SVG y grows downward)
    double operator()(double v) const {
        return px0 + (v - r.lo) / (r.hi - r.lo) * (px1 - px0);
    }
};

void axes(std::string& svg, const Scale& xs, const Scale& ys, const std::string& xlabel,
          const std::string& ylabel, const std::string& title) {
    const double left = xs.px0, right = xs.px1, top = ys.px1, bottom = ys.px0;
    svg += "<rect x='" + num(left) + "' y='" + num(top) + "' width='" + num(right - left) +
           "' height='" + num(bottom - top) + "' fill='none' stroke='#333333' stroke-width='1'/>\n";
    const double dx = tick_step(xs.r);
    for (double v = std::ceil(xs.r.lo / dx) * dx; v <= xs.r.hi + 1e-12; v += dx) {
        const double px = xs(v);
        svg += "<line x1='" + num(px) + "' y1='" + num(bottom) + "' x2='" + num(px) + "' y2='" +
               num(bottom + 4) + "' stroke='#333333' stroke-width='1'/>\n";
        svg += "<text x='" + num(px) + "' y='" + num(bottom + 16) +
               "' font-size='10' text-anchor='middle' fill='#333333'>" + tick_label(v) +
               "</text>\n";
    }
    const double dy = tick_step(ys.r);
    for (double v = std::ceil(ys.r.lo / dy) * dy; v <= ys.r.hi + 1e-12; v += dy) {
        const double py = ys(v);
        svg += "<line x1='" + num(left - 4) + "' y1='" + num(py) + "' x2='" + num(left) +
               "' y2='" + num(py) + "' stroke='#333333' stroke-width='1'/>\n";
        svg += "<text x='" + num(left - 6) + "' y='" + num(py + 3) +
               "' font-size='10' text-anchor='end' fill='#333333'>" + tick_label(v) +
               "</text>\n";
    }
    svg += "<text x='" + num((left + right) / 2) + "' y='" + num(bottom + 32) +
           "' font-size='12' text-anchor='middle' fill='#000000'>" + xlabel + "</text>\n";
    svg += "<text x='" + num(left - 38) + "' y='" + num((top + bottom) / 2) +
           "' font-size='12' text-anchor='middle' fill='#000000' transform='rotate(-90 " +
           num(left - 38) + " " + num((top + bottom) / 2) + ")'>" + ylabel + "</text>\n";
    svg += "<text x='" + num((left + right) / 2) + "' y='" + num(top - 8) +
           "' font-size='12' text-anchor='middle' fill='#000000'>" + title + "</text>\n";
}

void histogram_panel(std::string& svg, const std::vector<double>& values, double panel_x,
                     double panel_w, double panel_top, double panel_bottom,
                     const std::string& label, const std::string& title) {
    constexpr int kBins = 30;
    Range r = fresh_range();
    for (double v : values) r.include(v);
    r.pad(0.02);

    std::vector<int> counts(kBins, 0);
    const double width = (r.hi - r.lo) / kBins;
    for (double v : values) {
        int b = static_cast<int>((v - r.lo) / width);
        b = std::clamp(b, 0, kBins - 1);
        ++counts[b];
    }
    const int max_count = *std::max_element(counts.begin(), counts.end());

    Scale xs{r, panel_x, panel_x + panel_w};
    Range cr{0.0, static_cast<double>(std::max(max_count, 1))};
    Scale ys{cr, panel_bottom, panel_top};
    for (int b = 0; b < kBins; ++b) {
        if (counts[b] == 0) continue;
        const double x0 = xs(r.lo + b * width);
        const double x1 = xs(r.lo + (b + 1) * width);
        const double y = ys(counts[b]);
        svg += "<rect x='" + num(x0) + "' y='" + num(y) + "' width='" + num(x1 - x0) +
               "' height='" + num(panel_bottom - y) +
               "' fill='#7da7d9' stroke='#41618f' stroke-width='0.5'/>\n";
    }
    axes(svg, xs, ys, label, "count", title);
}

}  // namespace

std::string figure_svg(MeasurePlane plane, const std::vector<Eigen::Vector2d>& scatter,
                       const std::vector<RegionPolyline>& regions,
                       const Eigen::Vector2d& point_estimate) {
    const auto [xlabel, ylabel] = plane_axes(plane);

    Range xr = fresh_range(), yr = fresh_range();
    for (const auto& p : scatter) {
        xr.include(p[0]);
        yr.include(p[1]);
    }
    for (const auto& poly : regions)
        for (const auto& p : poly.points) {
            xr.include(p[0]);
            yr.include(p[1]);
        }
    xr.include(point_estimate[0]);
    yr.include(point_estimate[1]);
    xr.pad(0.05);
    yr.pad(0.05);

    std::string svg;
    svg += "<?xml version='1.0' encoding='UTF-8'?>\n";
    svg += "<svg xmlns='http://www.w3.org/2000/svg' width='960' height='370' "
           "viewBox='0 0 960 370'>\n";
    svg += "<rect x='0' y='0' width='960' height='370' fill='#ffffff'/>\n";

    // panel (a): joint draws, confidence regions, point estimate
    Scale xs{xr, 55, 335};
    Scale ys{yr, 320, 40};
    for (const auto& p : scatter)
        svg += "<circle cx='" + num(xs(p[0])) + "' cy='" + num(ys(p[1])) +
               "' r='1.4' fill='#7da7d9' fill-opacity='0.45'/>\n";
    int color_idx = 0;
    const char* region_colors[] = {"#d95f02", "#1f78b4", "#33a02c", "#6a3d9a"};
    for (const auto& poly : regions) {
        std::string pts;
        for (const auto& p : poly.points)
            pts += num(xs(p[0])) + "," + num(ys(p[1])) + " ";
        const char* color = region_colors[color_idx % 4];
        svg += "<polyline points='" + pts + "' fill='none' stroke='" + color +
               "' stroke-width='1.8'/>\n";
        char label[64];
        std::snprintf(label, sizeof(label), "%g%%", poly.level * 100.0);
        const double ly = 52.0 + 14.0 * color_idx;
        svg += "<line x1='292' y1='" + num(ly - 4) + "' x2='310' y2='" + num(ly - 4) +
               "' stroke='" + std::string(color) + "' stroke-width='1.8'/>\n";
        svg += "<text x='314' y='" + num(ly) + "' font-size='10' fill='#000000'>" +
               std::string(label) + "</text>\n";
        ++color_idx;
    }
    const double px = xs(point_estimate[0]), py = ys(point_estimate[1]);
    svg += "<line x1='" + num(px - 5) + "' y1='" + num(py) + "' x2='" + num(px + 5) + "' y2='" +
           num(py) + "' stroke='#000000' stroke-width='1.6'/>\n";
    svg += "<line x1='" + num(px) + "' y1='" + num(py - 5) + "' x2='" + num(px) + "' y2='" +
           num(py + 5) + "' stroke='#000000' stroke-width='1.6'/>\n";
    axes(svg, xs, ys, xlabel, ylabel, "(a) (" + xlabel + ", " + ylabel + ") draws and regions");

    // panels (b), (c): marginal histograms
    std::vector<double> xvals, yvals;
    xvals.reserve(scatter.size());
    yvals.reserve(scatter.size());
    for (const auto& p : scatter) {
        xvals.push_back(p[0]);
        yvals.push_back(p[1]);
    }
    if (!xvals.empty()) {
        histogram_panel(svg, xvals, 400, 240, 40, 320, xlabel, "(b) " + xlabel);
        histogram_panel(svg, yvals, 705, 240, 40, 320, ylabel, "(c) " + ylabel);
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace riskregion
