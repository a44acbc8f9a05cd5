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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace sidelobe {

using Rng = std::mt19937_64;

struct Point
{
    double x = 0.0; // m
    double y = 0.0; // m

    bool operator==(const Point&) const = default;
};

double distance(Point a, Point b);

/// Absolute bearing of \p to as seen from \p from, degrees in (-180, 180].
double bearing_deg(Point from, Point to);

struct NetworkConfig
{
    double radius_m = 100.0;
    double bs_density = 6e-4;  // m^-2
    double ue_density = 1.5e-3; // m^-2
    std::uint64_t seed = 1;

    void validate() const;
    bool operator==(const NetworkConfig&) const = default;
};

/// A sampled network. The reference BS sits at the origin and serves the
/// reference UE.
struct Deployment
{
    std::vector<Point> bs_positions;
    std::vector<Point> ue_positions;
    std::vector<std::size_t> association; // UE index -> BS index
    std::size_t typical_bs = 0;
    std::size_t typical_ue = 0;

    Point reference_bs() const { return bs_positions.at(typical_bs); }
    Point reference_ue() const { return ue_positions.at(typical_ue); }
};

struct LinkGeometry
{
    double distance_m = 0.0;
    double aoa_deg = 0.0; // arrival azimuth relative to the receiver boresight
    double aod_deg = 0.0; // departure azimuth relative to the transmitter boresight
};

/// Homogeneous PPP on a disc centred at the origin.
std::vector<Point> sample_ppp(double density, double radius_m, Rng& rng);

/// Nearest-BS association; ties go to the lowest BS index.
std::vector<std::size_t> associate_nearest(const std::vector<Point>& bs_positions,
                                           const std::vector<Point>& ue_positions);

inline constexpr int kMaxDeploymentRedraws = 100;

/// Draws BS and UE PPPs, pins the reference BS at the origin (index 0) and
/// picks the reference UE uniformly among the UEs it serves. Redraws the
/// whole topology when the reference BS serves nobody and throws
/// std::runtime_error after kMaxDeploymentRedraws attempts.
Deployment build_deployment(const NetworkConfig& cfg, Rng& rng);

/// Throws std::invalid_argument for coincident endpoints.
LinkGeometry link_geometry(Point tx_pos, Point rx_pos, double tx_boresight_deg,
                           double rx_boresight_deg);

/// CSV columns: kind,index,x_m,y_m,assoc_bs (assoc_bs empty for BS rows).
void write_deployment_csv(std::ostream& os, const Deployment& dep);

} // namespace sidelobe
