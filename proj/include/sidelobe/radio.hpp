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

#include <limits>
#include <numbers>
#include <optional>

namespace sidelobe {

constexpr double kNoPowerDbm = -std::numeric_limits<double>::infinity();

double db_to_linear(double db);
/// Returns -inf for a zero argument.
double linear_to_db(double lin);

/// Sectored Gaussian pattern: G_m exp(-rho x^2) inside the half-beamwidth,
/// flat G_s outside, with rho = 2.028 ln(10) / z^2 (x, z in radians).
struct AntennaPattern
{
    double beamwidth_deg = 10.0;
    double main_gain = 1.0; // linear
    double side_gain = 0.0; // linear
    double boresight_deg = 0.0;

    void validate() const;
    bool operator==(const AntennaPattern&) const = default;
};

/// Reference gain G0(z) = pi / (21.32 z + pi), z in radians.
double reference_gain(double beamwidth_deg);

/// Base-station receive pattern: G_s = G0, G_m = G0 * 10^2.028.
AntennaPattern default_rx_pattern(double beamwidth_deg = 10.0);
/// UE transmit pattern: G_s = 0, G_m = 2 G0 * 10^2.028.
AntennaPattern default_tx_pattern(double beamwidth_deg = 135.0);

double antenna_gain(const AntennaPattern& pattern, double offset_deg);

/// Peak-to-side-lobe ratio G_m / G_s (linear). +inf when the side lobe is dead.
double psl(const AntennaPattern& pattern);

struct ChannelParams
{
    double pl0_db = 60.1;
    double pl_exponent = 1.4;
    double ref_distance_m = 1000.0;
    double shadow_sigma_db = 0.0;
    double nakagami_m = 3.0; // +inf disables fading
    double blockage_a_db = 100.0;
    double blockage_sigma_deg = 2.0 * std::numbers::sqrt2; // sqrt(8) * r_B with r_B = 1 m
    double tx_power_dbm = 19.6;
    double noise_psd_dbm_hz = -174.0;
    double bandwidth_hz = 400e6;

    void validate() const;
    double noise_power_dbm() const;
    double noise_power_mw() const;
    bool operator==(const ChannelParams&) const = default;
};

/// sigma_B = sqrt(8) r_B, read in degrees.
double blockage_sigma_for_radius(double blocker_radius_m);

/// Distance-dependent loss PL0 + 10 eta log10(d / d_ref), in dB (positive).
double pathloss_db(const ChannelParams& params, double distance_m);

/// Blocker shadowing -A exp(-sep^2 / sigma_B^2) in dB, never positive.
double blockage_db(double angle_sep_deg, const ChannelParams& params);

/// Unit-mean Gamma(m, 1/m) power coefficient (squared Nakagami-m envelope).
double fading_sample(double m, Rng& rng);

/// Static log-normal shadowing draw in dB (0 when sigma is 0).
double shadow_sample(const ChannelParams& params, Rng& rng);

struct LinkState
{
    double static_shadow_db = 0.0;
    double fading_power = 1.0;
};

/// The angular blockage model only applies to a link whose transmitter is
/// not closer to the receiver than the blocker's near edge.
bool blocker_occludes(double blocker_distance_m, double blocker_radius_m, double link_distance_m);

/// Received power in dBm, composed in dB. kNoPowerDbm when either antenna
/// has zero gain toward the other end.
double received_power_dbm(const AntennaPattern& tx_pattern, const AntennaPattern& rx_pattern,
                          const LinkGeometry& geom, const LinkState& link,
                          std::optional<double> blocker_sep_deg, const ChannelParams& params);

} // namespace sidelobe
