// SPDX-License-Identifier: Apache-2.0
//
// sidelobe-sensing: side-lobe interference sensing of moving mmWave blockers
// Copyright (C) 2026 The sidelobe-sensing authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "sidelobe/report.hpp"

#include "sidelobe/angles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sidelobe {

namespace {

// dark blue -> teal -> yellow
constexpr std::array<Rgb, 5> kRamp{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};

std::string num(double v, int digits = 2)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

void open_svg(std::ostream& os, int w, int h, const std::string& title)
{
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
       << "</text>\n";
}

void close_svg(std::ostream& os) { os << "</svg>\n"; }

/// Vertical colour bar at (x, y) with min/mid/max labels.
void legend(std::ostream& os, const ColorScale& scale, double x, double y, double h, const std::string& label)
{
    constexpr int steps = 64;
    const double cell = h / steps;
    os << "<g class=\"legend\">\n";
    for (int i = 0; i < steps; ++i) {
        const double v = scale.hi - (scale.hi - scale.lo) * (i + 0.5) / steps;
        os << "<rect x=\"" << num(x) << "\" y=\"" << num(y + i * cell) << "\" width=\"14\" height=\""
           << num(cell + 0.3) << "\" fill=\"" << to_hex(scale.at(v)) << "\"/>\n";
    }
    os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"14\" height=\"" << num(h)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    for (int i = 0; i <= 2; ++i) {
        const double v = scale.hi - (scale.hi - scale.lo) * i / 2.0;
        os << "<text x=\"" << num(x + 18) << "\" y=\"" << num(y + h * i / 2.0 + 4) << "\">" << num(v, 1)
           << "</text>\n";
    }
    os << "<text x=\"" << num(x) << "\" y=\"" << num(y - 8) << "\">" << escape(label) << "</text>\n";
    os << "</g>\n";
}

struct Axes
{
    double x0, y0, w, h;       // plot area in pixels
    double xmin, xmax, ymin, ymax;

    double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
    double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void draw_axes(std::ostream& os, const Axes& a, const std::string& xlabel, const std::string& ylabel)
{
    os << "<rect x=\"" << num(a.x0) << "\" y=\"" << num(a.y0) << "\" width=\"" << num(a.w) << "\" height=\""
       << num(a.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = a.xmin + (a.xmax - a.xmin) * i / 4.0;
        const double yv = a.ymin + (a.ymax - a.ymin) * i / 4.0;
        os << "<text x=\"" << num(a.px(xv)) << "\" y=\"" << num(a.y0 + a.h + 14)
           << "\" text-anchor=\"middle\">" << num(xv, 1) << "</text>\n";
        os << "<text x=\"" << num(a.x0 - 4) << "\" y=\"" << num(a.py(yv) + 4) << "\" text-anchor=\"end\">"
           << num(yv, 1) << "</text>\n";
    }
    os << "<text x=\"" << num(a.x0 + a.w / 2) << "\" y=\"" << num(a.y0 + a.h + 30)
       << "\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n";
    os << "<text transform=\"translate(" << num(a.x0 - 42) << ',' << num(a.y0 + a.h / 2)
       << ") rotate(-90)\" text-anchor=\"middle\">" << escape(ylabel) << "</text>\n";
}

} // namespace

Rgb ColorScale::at(double value) const
{
    double t = hi > lo ? (value - lo) / (hi - lo) : 0.5;
    if (!std::isfinite(t))
        t = 0.0;
    t = std::clamp(t, 0.0, 1.0) * static_cast<double>(kRamp.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(t), kRamp.size() - 2);
    const double f = t - static_cast<double>(i);
    auto mix = [f](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * f)); };
    return {mix(kRamp[i].r, kRamp[i + 1].r), mix(kRamp[i].g, kRamp[i + 1].g), mix(kRamp[i].b, kRamp[i + 1].b)};
}

ColorScale ColorScale::fit(const std::vector<double>& values)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double v : values)
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!std::isfinite(lo))
        return {0.0, 1.0};
    if (hi == lo)
        return {lo - 0.5, hi + 0.5};
    return {lo, hi};
}

std::string to_hex(Rgb c)
{
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r & 0xff, c.g & 0xff, c.b & 0xff);
    return buf;
}

std::string annular_sector_path(double cx, double cy, double r0, double r1, double a0_deg, double a1_deg)
{
    const double span = a1_deg - a0_deg;
    if (!(span > 0.0 && span < 360.0) || !(r0 >= 0.0 && r1 > r0))
        throw std::invalid_argument("annular_sector_path: bad sector bounds");
    const double a0 = deg_to_rad(a0_deg);
    const double a1 = deg_to_rad(a1_deg);
    const int large = span > 180.0 ? 1 : 0;
    auto pt = [&](double r, double a) { return num(cx + r * std::cos(a), 3) + ',' + num(cy - r * std::sin(a), 3); };

    // screen y points down, so counter-clockwise bearings use sweep-flag 0
    std::string d = "M" + pt(r1, a0) + " A" + num(r1, 3) + ',' + num(r1, 3) + " 0 " + std::to_string(large) +
                    " 0 " + pt(r1, a1);
    if (r0 > 0.0)
        d += " L" + pt(r0, a1) + " A" + num(r0, 3) + ',' + num(r0, 3) + " 0 " + std::to_string(large) + " 1 " +
             pt(r0, a0);
    else
        d += " L" + num(cx, 3) + ',' + num(cy, 3);
    return d + " Z";
}

void write_polar_heatmap_svg(std::ostream& os, const std::vector<CellStat>& cells, const std::string& title)
{
    constexpr int W = 560;
    constexpr int H = 480;
    constexpr double cx = 250.0;
    constexpr double cy = 250.0;
    constexpr double radius_px = 200.0;

    double max_d = 0.0;
    std::vector<double> maes;
    for (const auto& c : cells) {
        max_d = std::max(max_d, c.cell.d_hi_m);
        if (c.mae_deg)
            maes.push_back(*c.mae_deg);
    }
    const double k = max_d > 0.0 ? radius_px / max_d : 1.0;
    const ColorScale scale = ColorScale::fit(maes);

    open_svg(os, W, H, title);
    os << "<defs><pattern id=\"nodata\" width=\"4\" height=\"4\" patternUnits=\"userSpaceOnUse\">"
          "<rect width=\"4\" height=\"4\" fill=\"#dddddd\"/><path d=\"M0,4 L4,0\" stroke=\"#999999\"/>"
          "</pattern></defs>\n";
    os << "<g stroke=\"white\" stroke-width=\"0.3\">\n";
    for (const auto& c : cells) {
        const std::string fill = c.mae_deg ? to_hex(scale.at(*c.mae_deg)) : std::string("url(#nodata)");
        os << "<path d=\"" << annular_sector_path(cx, cy, c.cell.d_lo_m * k, c.cell.d_hi_m * k, c.cell.psi_lo_deg,
                                                  c.cell.psi_hi_deg)
           << "\" fill=\"" << fill << "\"><title>d " << num(c.cell.d_lo_m, 1) << '-' << num(c.cell.d_hi_m, 1)
           << " m, psi " << num(c.cell.psi_lo_deg, 1) << '-' << num(c.cell.psi_hi_deg, 1) << " deg: "
           << (c.mae_deg ? num(*c.mae_deg) : std::string("n/a")) << "</title></path>\n";
    }
    os << "</g>\n";

    // bearing ticks every 90 deg and an outer range label
    for (int a = 0; a < 360; a += 90) {
        const double r = deg_to_rad(a);
        os << "<text x=\"" << num(cx + (radius_px + 14) * std::cos(r)) << "\" y=\""
           << num(cy - (radius_px + 14) * std::sin(r) + 4) << "\" text-anchor=\"middle\">" << a << "&#176;</text>\n";
    }
    os << "<text x=\"" << num(cx + 4) << "\" y=\"" << num(cy - radius_px - 2) << "\">" << num(max_d, 0)
       << " m</text>\n";
    os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"2.5\" fill=\"red\"/>\n";
    legend(os, scale, 490.0, 80.0, 300.0, "MAE [deg]");
    close_svg(os);
}

void write_matrix_heatmap_svg(std::ostream& os, const Eigen::MatrixXd& values, const std::string& title,
                              const std::string& row_label, const std::string& col_label)
{
    const double rows = static_cast<double>(std::max<Eigen::Index>(values.rows(), 1));
    const double cols = static_cast<double>(std::max<Eigen::Index>(values.cols(), 1));
    const Axes a{60.0, 40.0, 420.0, 400.0, 0.0, cols, rows, 0.0};

    std::vector<double> all(values.data(), values.data() + values.size());
    const ColorScale scale = ColorScale::fit(all);

    open_svg(os, 580, 490, title);
    const double cw = a.w / cols;
    const double ch = a.h / rows;
    for (Eigen::Index r = 0; r < values.rows(); ++r)
        for (Eigen::Index c = 0; c < values.cols(); ++c)
            os << "<rect x=\"" << num(a.x0 + c * cw) << "\" y=\"" << num(a.y0 + r * ch) << "\" width=\""
               << num(cw + 0.2) << "\" height=\"" << num(ch + 0.2) << "\" fill=\"" << to_hex(scale.at(values(r, c)))
               << "\"/>\n";
    draw_axes(os, a, col_label, row_label);
    legend(os, scale, 510.0, 60.0, 360.0, "value");
    close_svg(os);
}

void write_deployment_svg(std::ostream& os, const Deployment& deployment,
                          const std::vector<BlockerState>& trajectory, double link_boresight_deg)
{
    double extent = 1.0;
    for (const Point& p : deployment.bs_positions)
        extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    for (const Point& p : deployment.ue_positions)
        extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    const Axes a{60.0, 40.0, 400.0, 400.0, -extent, extent, -extent, extent};

    open_svg(os, 600, 490, "Deployment and blocker path");
    draw_axes(os, a, "x [m]", "y [m]");
    const Point b0 = deployment.reference_bs();
    const Point u0 = deployment.reference_ue();

    for (std::size_t i = 0; i < deployment.ue_positions.size(); ++i) {
        const Point u = deployment.ue_positions[i];
        const Point b = deployment.bs_positions[deployment.association[i]];
        os << "<line x1=\"" << num(a.px(u.x)) << "\" y1=\"" << num(a.py(u.y)) << "\" x2=\"" << num(a.px(b.x))
           << "\" y2=\"" << num(a.py(b.y)) << "\" stroke=\"#cccccc\" stroke-width=\"0.6\"/>\n";
    }
    for (const Point& p : deployment.ue_positions)
        os << "<circle cx=\"" << num(a.px(p.x)) << "\" cy=\"" << num(a.py(p.y))
           << "\" r=\"2\" fill=\"#1f77b4\"/>\n";
    for (const Point& p : deployment.bs_positions)
        os << "<rect x=\"" << num(a.px(p.x) - 3.5) << "\" y=\"" << num(a.py(p.y) - 3.5)
           << "\" width=\"7\" height=\"7\" fill=\"#d62728\"/>\n";
    os << "<line x1=\"" << num(a.px(b0.x)) << "\" y1=\"" << num(a.py(b0.y)) << "\" x2=\"" << num(a.px(u0.x))
       << "\" y2=\"" << num(a.py(u0.y)) << "\" stroke=\"black\" stroke-width=\"1.5\"><title>reference link, "
       << num(link_boresight_deg, 1) << " deg</title></line>\n";

    if (!trajectory.empty()) {
        os << "<polyline fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"1.5\" points=\"";
        for (const auto& s : trajectory) {
            const double r = deg_to_rad(s.bearing_deg);
            os << num(a.px(b0.x + s.distance_m * std::cos(r))) << ',' << num(a.py(b0.y + s.distance_m * std::sin(r)))
               << ' ';
        }
        os << "\"/>\n";
    }
    os << "<g font-size=\"10\"><rect x=\"475\" y=\"60\" width=\"7\" height=\"7\" fill=\"#d62728\"/>"
          "<text x=\"488\" y=\"67\">BS</text>"
          "<circle cx=\"478.5\" cy=\"82\" r=\"2\" fill=\"#1f77b4\"/><text x=\"488\" y=\"86\">UE</text>"
          "<line x1=\"472\" y1=\"100\" x2=\"484\" y2=\"100\" stroke=\"black\" stroke-width=\"1.5\"/>"
          "<text x=\"488\" y=\"104\">reference link</text>"
          "<line x1=\"472\" y1=\"118\" x2=\"484\" y2=\"118\" stroke=\"#ff7f0e\" stroke-width=\"1.5\"/>"
          "<text x=\"488\" y=\"122\">blocker</text></g>\n";
    close_svg(os);
}

void write_trajectory_svg(std::ostream& os, const std::vector<BlockerState>& trajectory,
                          const std::vector<AngularEstimate>& estimates)
{
    const double n = static_cast<double>(std::max<std::size_t>(trajectory.size(), 2) - 1);
    const Axes a{60.0, 40.0, 420.0, 380.0, 0.0, n, -180.0, 180.0};

    open_svg(os, 600, 480, "Blocker bearing: truth and estimate");
    draw_axes(os, a, "epoch", "bearing [deg]");

    // break the truth line where it wraps
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    std::string pts;
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        if (t > 0 && std::abs(trajectory[t].bearing_deg - trajectory[t - 1].bearing_deg) > 180.0) {
            os << "<polyline points=\"" << pts << "\"/>\n";
            pts.clear();
        }
        pts += num(a.px(static_cast<double>(t))) + ',' + num(a.py(trajectory[t].bearing_deg)) + ' ';
    }
    if (!pts.empty())
        os << "<polyline points=\"" << pts << "\"/>\n";
    os << "</g>\n";

    for (const auto& e : estimates)
        if (e.bearing_deg)
            os << "<circle cx=\"" << num(a.px(static_cast<double>(e.epoch))) << "\" cy=\""
               << num(a.py(wrap_deg(*e.bearing_deg))) << "\" r=\"3\" fill=\"#d62728\"/>\n";

    os << "<g font-size=\"10\"><line x1=\"495\" y1=\"60\" x2=\"507\" y2=\"60\" stroke=\"black\" "
          "stroke-width=\"1.5\"/><text x=\"511\" y=\"64\">truth</text>"
          "<circle cx=\"501\" cy=\"78\" r=\"3\" fill=\"#d62728\"/><text x=\"511\" y=\"82\">estimate</text></g>\n";
    close_svg(os);
}

void write_sweep_svg(std::ostream& os, const std::vector<std::pair<double, EvalResult>>& results,
                     const std::string& axis_label, const std::string& title)
{
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymax = 0.0;
    for (const auto& [x, res] : results) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        for (const auto& w : res.wmae_by_mu)
            if (w.value)
                ymax = std::max(ymax, *w.value + w.ci95);
    }
    if (!(xmax > xmin)) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (!(ymax > 0.0))
        ymax = 1.0;
    const Axes a{60.0, 40.0, 420.0, 380.0, xmin, xmax, 0.0, ymax * 1.05};

    open_svg(os, 620, 480, title);
    draw_axes(os, a, axis_label, "wMAE [deg]");
    if (!results.empty()) {
        const std::size_t n_mu = results.front().second.wmae_by_mu.size();
        const ColorScale scale{0.0, static_cast<double>(std::max<std::size_t>(n_mu, 2) - 1)};
        for (std::size_t m = 0; m < n_mu; ++m) {
            const std::string colour = to_hex(scale.at(static_cast<double>(m)));
            os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& [x, res] : results)
                if (m < res.wmae_by_mu.size() && res.wmae_by_mu[m].value)
                    os << num(a.px(x)) << ',' << num(a.py(*res.wmae_by_mu[m].value)) << ' ';
            os << "\"/>\n";
            for (const auto& [x, res] : results)
                if (m < res.wmae_by_mu.size() && res.wmae_by_mu[m].value) {
                    const auto& w = res.wmae_by_mu[m];
                    os << "<line x1=\"" << num(a.px(x)) << "\" y1=\"" << num(a.py(*w.value - w.ci95)) << "\" x2=\""
                       << num(a.px(x)) << "\" y2=\"" << num(a.py(*w.value + w.ci95)) << "\" stroke=\"" << colour
                       << "\"/>\n";
                }
            os << "<line x1=\"500\" y1=\"" << 60 + 16 * m << "\" x2=\"514\" y2=\"" << 60 + 16 * m
               << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/><text x=\"518\" y=\"" << 64 + 16 * m
               << "\">mu = " << num(results.front().second.wmae_by_mu[m].mu, 3) << "</text>\n";
        }
    }
    close_svg(os);
}

} // namespace sidelobe
