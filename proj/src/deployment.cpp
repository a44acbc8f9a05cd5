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

#include "sidelobe/deployment.hpp"

#include "sidelobe/angles.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sidelobe {

double distance(Point a, Point b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double bearing_deg(Point from, Point to)
{
    return wrap_deg(rad_to_deg(std::atan2(to.y - from.y, to.x - from.x)));
}

void NetworkConfig::validate() const
{
    if (!(radius_m > 0.0) || !std::isfinite(radius_m))
        throw std::invalid_argument("network.radius_m must be positive");
    if (!(bs_density >= 0.0) || !std::isfinite(bs_density))
        throw std::invalid_argument("network.bs_density must be non-negative");
    if (!(ue_density >= 0.0) || !std::isfinite(ue_density))
        throw std::invalid_argument("network.ue_density must be non-negative");
}

std::vector<Point> sample_ppp(double density, double radius_m, Rng& rng)
{
    if (density < 0.0 || !(radius_m > 0.0))
        throw std::invalid_argument("sample_ppp: density must be >= 0 and radius > 0");
    std::vector<Point> points;
    if (density == 0.0)
        return points;

    const double mean = density * kPi * radius_m * radius_m;
    std::poisson_distribution<std::size_t> count_dist(mean);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::size_t n = count_dist(rng);
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = radius_m * std::sqrt(unit(rng));
        const double theta = 2.0 * kPi * unit(rng);
        points.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return points;
}

std::vector<std::size_t> associate_nearest(const std::vector<Point>& bs_positions,
                                           const std::vector<Point>& ue_positions)
{
    if (bs_positions.empty() && !ue_positions.empty())
        throw std::invalid_argument("associate_nearest: no base stations");

    std::vector<std::size_t> assoc(ue_positions.size(), 0);
    for (std::size_t u = 0; u < ue_positions.size(); ++u) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < bs_positions.size(); ++b) {
            // squared distance keeps exact ties exact
            const double dx = ue_positions[u].x - bs_positions[b].x;
            const double dy = ue_positions[u].y - bs_positions[b].y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) {
                best = d2;
                assoc[u] = b;
            }
        }
    }
    return assoc;
}

Deployment build_deployment(const NetworkConfig& cfg, Rng& rng)
{
    cfg.validate();

    for (int attempt = 0; attempt < kMaxDeploymentRedraws; ++attempt) {
        Deployment dep;
        dep.bs_positions.push_back({0.0, 0.0});
        for (const Point& p : sample_ppp(cfg.bs_density, cfg.radius_m, rng))
            dep.bs_positions.push_back(p);
        dep.ue_positions = sample_ppp(cfg.ue_density, cfg.radius_m, rng);
        dep.association = associate_nearest(dep.bs_positions, dep.ue_positions);
        dep.typical_bs = 0;

        std::vector<std::size_t> served;
        for (std::size_t u = 0; u < dep.association.size(); ++u)
            if (dep.association[u] == dep.typical_bs)
                served.push_back(u);
        if (served.empty())
            continue;

        std::uniform_int_distribution<std::size_t> pick(0, served.size() - 1);
        dep.typical_ue = served[pick(rng)];
        return dep;
    }
    throw std::runtime_error("build_deployment: reference BS served no UE after "
                             + std::to_string(kMaxDeploymentRedraws) + " redraws");
}

LinkGeometry link_geometry(Point tx_pos, Point rx_pos, double tx_boresight_deg,
                           double rx_boresight_deg)
{
    const double d = distance(tx_pos, rx_pos);
    if (!(d > 0.0))
        throw std::invalid_argument("link_geometry: coincident transmitter and receiver");

    LinkGeometry g;
    g.distance_m = d;
    g.aoa_deg = wrap_deg(bearing_deg(rx_pos, tx_pos) - rx_boresight_deg);
    g.aod_deg = wrap_deg(bearing_deg(tx_pos, rx_pos) - tx_boresight_deg);
    return g;
}

void write_deployment_csv(std::ostream& os, const Deployment& dep)
{
    os.precision(12);
    os << "kind,index,x_m,y_m,assoc_bs\n";
    for (std::size_t b = 0; b < dep.bs_positions.size(); ++b)
        os << "bs," << b << ',' << dep.bs_positions[b].x << ',' << dep.bs_positions[b].y << ",\n";
    for (std::size_t u = 0; u < dep.ue_positions.size(); ++u)
        os << "ue," << u << ',' << dep.ue_positions[u].x << ',' << dep.ue_positions[u].y << ','
           << dep.association[u] << '\n';
}

} // namespace sidelobe
