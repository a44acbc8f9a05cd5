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

#pragma once

#include "sidelobe/deployment.hpp"

#include <iosfwd>
#include <vector>

namespace sidelobe {

/// Polar blocker state around the reference BS.
struct BlockerState
{
    double distance_m = 0.0;
    double bearing_deg = 0.0; // absolute azimuth from the reference BS
    double radius_m = 1.0;
    double angular_velocity_deg_s = 0.0;
    double radial_velocity_m_s = 0.0;
    double hold_remaining_s = 0.0; // time until velocities are redrawn

    bool operator==(const BlockerState&) const = default;
};

/// Piecewise-constant random motion. Velocities are drawn uniformly from
/// the symmetric ranges and held for hold_s; distance reflects at the bounds.
struct RandomMotionLaw
{
    double max_angular_velocity_deg_s = 15.0;
    double max_radial_velocity_m_s = 1.0;
    double hold_s = 10.0;
    double d_min_m = 2.0;
    double d_max_m = 100.0;

    void validate() const;
    bool operator==(const RandomMotionLaw&) const = default;
};

BlockerState step_random(const BlockerState& state, double dt_s, Rng& rng,
                         const RandomMotionLaw& law);

struct GridCell
{
    double d_lo_m = 0.0;
    double d_hi_m = 0.0;
    double psi_lo_deg = 0.0;
    double psi_hi_deg = 0.0;

    double center_distance_m() const { return 0.5 * (d_lo_m + d_hi_m); }
    double center_bearing_deg() const { return 0.5 * (psi_lo_deg + psi_hi_deg); }
    bool operator==(const GridCell&) const = default;
};

/// Ring-major polar grid with absolute bearings starting at 0 deg.
std::vector<GridCell> make_grid(double max_radius_m = 50.0, double ring_width_m = 5.0,
                                double cell_angle_deg = 10.0);

/// Visits every cell centre for dwell_epochs consecutive epochs in grid order.
std::vector<BlockerState> grid_trajectory(const std::vector<GridCell>& grid,
                                          std::size_t dwell_epochs,
                                          double blocker_radius_m = 1.0);

/// Blocker azimuth relative to a link boresight, (-180, 180].
double angle_to_link(const BlockerState& state, double link_boresight_deg);

/// CSV columns: epoch,d_m,bearing_deg.
void write_trajectory_csv(std::ostream& os, const std::vector<BlockerState>& trajectory);

} // namespace sidelobe
