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

#include "sidelobe/radio.hpp"

#include "sidelobe/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace sidelobe {

namespace {

// rho_z (z/2)^2 for the sectored Gaussian; gives the main-lobe edge in dB.
constexpr double kMainLobeExponent = 2.028;

} // namespace

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double lin)
{
    if (lin <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(lin);
}

void AntennaPattern::validate() const
{
    if (!(beamwidth_deg > 0.0 && beamwidth_deg < 360.0))
        throw std::invalid_argument("antenna beamwidth_deg must be in (0, 360)");
    if (!(main_gain > 0.0) || !std::isfinite(main_gain))
        throw std::invalid_argument("antenna main_gain must be positive");
    if (!(side_gain >= 0.0))
        throw std::invalid_argument("antenna side_gain must be non-negative");
    if (main_gain < side_gain)
        throw std::invalid_argument("antenna main_gain must be >= side_gain");
}

double reference_gain(double beamwidth_deg)
{
    const double z = deg_to_rad(beamwidth_deg);
    return kPi / (21.32 * z + kPi);
}

AntennaPattern default_rx_pattern(double beamwidth_deg)
{
    const double g0 = reference_gain(beamwidth_deg);
    return {beamwidth_deg, g0 * std::pow(10.0, kMainLobeExponent), g0, 0.0};
}

AntennaPattern default_tx_pattern(double beamwidth_deg)
{
    const double g0 = reference_gain(beamwidth_deg);
    return {beamwidth_deg, 2.0 * g0 * std::pow(10.0, kMainLobeExponent), 0.0, 0.0};
}

double antenna_gain(const AntennaPattern& pattern, double offset_deg)
{
    // fold |offset| so that +x and -x take the same path
    const double folded = std::fmod(std::abs(offset_deg), 360.0);
    const double x = deg_to_rad(folded > 180.0 ? 360.0 - folded : folded);
    const double z = deg_to_rad(pattern.beamwidth_deg);
    if (x <= z / 2.0) {
        const double rho = kMainLobeExponent * std::log(10.0) / (z * z);
        return pattern.main_gain * std::exp(-rho * x * x);
    }
    return pattern.side_gain;
}

double psl(const AntennaPattern& pattern)
{
    if (pattern.side_gain == 0.0)
        return std::numeric_limits<double>::infinity();
    return pattern.main_gain / pattern.side_gain;
}

void ChannelParams::validate() const
{
    if (!(pl_exponent > 0.0))
        throw std::invalid_argument("channel.pl_exponent must be positive");
    if (!(ref_distance_m > 0.0))
        throw std::invalid_argument("channel.ref_distance_m must be positive");
    if (!(shadow_sigma_db >= 0.0))
        throw std::invalid_argument("channel.shadow_sigma_db must be non-negative");
    if (!(nakagami_m >= 0.5))
        throw std::invalid_argument("channel.nakagami_m must be >= 0.5");
    if (!(blockage_a_db >= 0.0))
        throw std::invalid_argument("channel.blockage_a_db must be non-negative");
    if (!(blockage_sigma_deg > 0.0))
        throw std::invalid_argument("channel.blockage_sigma_deg must be positive");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("channel.bandwidth_hz must be positive");
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(noise_psd_dbm_hz) || !std::isfinite(pl0_db))
        throw std::invalid_argument("channel power levels must be finite");
}

double ChannelParams::noise_power_dbm() const
{
    return noise_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz);
}

double ChannelParams::noise_power_mw() const
{
    return db_to_linear(noise_power_dbm());
}

double blockage_sigma_for_radius(double blocker_radius_m)
{
    return std::sqrt(8.0) * blocker_radius_m;
}

double pathloss_db(const ChannelParams& params, double distance_m)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("pathloss_db: distance must be positive");
    return params.pl0_db + 10.0 * params.pl_exponent * std::log10(distance_m / params.ref_distance_m);
}

double blockage_db(double angle_sep_deg, const ChannelParams& params)
{
    const double r = wrap_deg(angle_sep_deg) / params.blockage_sigma_deg;
    return -params.blockage_a_db * std::exp(-r * r);
}

double fading_sample(double m, Rng& rng)
{
    if (!(m >= 0.5))
        throw std::invalid_argument("fading_sample: Nakagami m must be >= 0.5");
    if (std::isinf(m))
        return 1.0;
    std::gamma_distribution<double> gamma(m, 1.0 / m);
    double g = gamma(rng);
    // keep the power strictly positive so it has a dB value
    while (!(g > 0.0))
        g = gamma(rng);
    return g;
}

double shadow_sample(const ChannelParams& params, Rng& rng)
{
    if (params.shadow_sigma_db == 0.0)
        return 0.0;
    std::normal_distribution<double> normal(0.0, params.shadow_sigma_db);
    return normal(rng);
}

bool blocker_occludes(double blocker_distance_m, double blocker_radius_m, double link_distance_m)
{
    return blocker_distance_m <= link_distance_m + blocker_radius_m;
}

double received_power_dbm(const AntennaPattern& tx_pattern, const AntennaPattern& rx_pattern,
                          const LinkGeometry& geom, const LinkState& link,
                          std::optional<double> blocker_sep_deg, const ChannelParams& params)
{
    if (!(link.fading_power > 0.0))
        throw std::invalid_argument("received_power_dbm: fading power must be positive");

    const double g_tx = antenna_gain(tx_pattern, geom.aod_deg);
    const double g_rx = antenna_gain(rx_pattern, geom.aoa_deg);
    if (g_tx == 0.0 || g_rx == 0.0)
        return kNoPowerDbm;

    double p = params.tx_power_dbm + linear_to_db(g_tx) + linear_to_db(g_rx)
               - pathloss_db(params, geom.distance_m) + link.static_shadow_db
               + linear_to_db(link.fading_power);
    if (blocker_sep_deg)
        p += blockage_db(*blocker_sep_deg, params);
    return p;
}

} // namespace sidelobe
