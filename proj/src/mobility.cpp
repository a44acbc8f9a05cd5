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

#include "sidelobe/mobility.hpp"

#include "sidelobe/angles.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sidelobe {

void RandomMotionLaw::validate() const
{
    if (!(max_angular_velocity_deg_s >= 0.0))
        throw std::invalid_argument("blocker.max_angular_velocity_deg_s must be non-negative");
    if (!(max_radial_velocity_m_s >= 0.0))
        throw std::invalid_argument("blocker.max_radial_velocity_m_s must be non-negative");
    if (!(hold_s > 0.0))
        throw std::invalid_argument("blocker.hold_s must be positive");
    if (!(d_min_m >= 0.0) || !(d_max_m > d_min_m))
        throw std::invalid_argument("blocker.d_min_m/d_max_m must satisfy 0 <= d_min < d_max");
}

BlockerState step_random(const BlockerState& state, double dt_s, Rng& rng,
                         const RandomMotionLaw& law)
{
    if (!(dt_s > 0.0))
        throw std::invalid_argument("step_random: dt must be positive");

    BlockerState next = state;
    if (next.hold_remaining_s <= 0.0) {
        std::uniform_real_distribution<double> omega(-law.max_angular_velocity_deg_s,
                                                     law.max_angular_velocity_deg_s);
        std::uniform_real_distribution<double> radial(-law.max_radial_velocity_m_s,
                                                      law.max_radial_velocity_m_s);
        next.angular_velocity_deg_s = omega(rng);
        next.radial_velocity_m_s = radial(rng);
        next.hold_remaining_s = law.hold_s;
    }

    next.bearing_deg = wrap_deg(next.bearing_deg + next.angular_velocity_deg_s * dt_s);

    double d = next.distance_m + next.radial_velocity_m_s * dt_s;
    if (d > law.d_max_m) {
        d = 2.0 * law.d_max_m - d;
        next.radial_velocity_m_s = -next.radial_velocity_m_s;
    } else if (d < law.d_min_m) {
        d = 2.0 * law.d_min_m - d;
        next.radial_velocity_m_s = -next.radial_velocity_m_s;
    }
    next.distance_m = std::clamp(d, law.d_min_m, law.d_max_m);
    next.hold_remaining_s -= dt_s;
    return next;
}

std::vector<GridCell> make_grid(double max_radius_m, double ring_width_m, double cell_angle_deg)
{
    if (!(ring_width_m > 0.0) || !(max_radius_m >= ring_width_m))
        throw std::invalid_argument("make_grid: need 0 < ring_width <= max_radius");
    if (!(cell_angle_deg > 0.0) || std::fmod(360.0, cell_angle_deg) > 1e-9)
        throw std::invalid_argument("make_grid: cell angle must divide 360");

    const auto rings = static_cast<std::size_t>(std::llround(std::floor(max_radius_m / ring_width_m + 1e-9)));
    const auto cells = static_cast<std::size_t>(std::llround(360.0 / cell_angle_deg));
    std::vector<GridCell> grid;
    grid.reserve(rings * cells);
    for (std::size_t r = 0; r < rings; ++r)
        for (std::size_t c = 0; c < cells; ++c)
            grid.push_back({static_cast<double>(r) * ring_width_m,
                            static_cast<double>(r + 1) * ring_width_m,
                            static_cast<double>(c) * cell_angle_deg,
                            static_cast<double>(c + 1) * cell_angle_deg});
    return grid;
}

std::vector<BlockerState> grid_trajectory(const std::vector<GridCell>& grid,
                                          std::size_t dwell_epochs, double blocker_radius_m)
{
    if (grid.empty())
        throw std::invalid_argument("grid_trajectory: empty grid");

    std::vector<BlockerState> traj;
    traj.reserve(grid.size() * dwell_epochs);
    for (const GridCell& cell : grid) {
        BlockerState s;
        s.distance_m = cell.center_distance_m();
        s.bearing_deg = wrap_deg(cell.center_bearing_deg());
        s.radius_m = blocker_radius_m;
        for (std::size_t e = 0; e < dwell_epochs; ++e)
            traj.push_back(s);
    }
    return traj;
}

double angle_to_link(const BlockerState& state, double link_boresight_deg)
{
    return wrap_deg(state.bearing_deg - link_boresight_deg);
}

void write_trajectory_csv(std::ostream& os, const std::vector<BlockerState>& trajectory)
{
    os.precision(12);
    os << "epoch,d_m,bearing_deg\n";
    for (std::size_t t = 0; t < trajectory.size(); ++t)
        os << t << ',' << trajectory[t].distance_m << ',' << trajectory[t].bearing_deg << '\n';
}

} // namespace sidelobe
