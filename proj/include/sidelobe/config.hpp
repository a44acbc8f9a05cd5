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
#include "sidelobe/mobility.hpp"
#include "sidelobe/radio.hpp"
#include "sidelobe/signature.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidelobe {

/// Validation or parse failure tied to a dotted config key.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key))
    {
    }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Beamwidth plus optional gain overrides; absent gains follow the G0 formulas.
struct AntennaSpec
{
    double beamwidth_deg = 10.0;
    std::optional<double> main_gain;
    std::optional<double> side_gain;

    bool operator==(const AntennaSpec&) const = default;
};

struct SensingSpec
{
    std::size_t tau = 50;
    std::size_t n_sectors = 36;

    bool operator==(const SensingSpec&) const = default;
};

struct BlockerSpec
{
    double r_b_m = 1.0;
    double dt_s = 1.0;
    std::size_t demo_epochs = 51;
    RandomMotionLaw motion;

    bool operator==(const BlockerSpec&) const = default;
};

struct EvalSpec
{
    std::size_t n_trials = 50;
    std::vector<double> mu = {0.0, 0.01, 0.02};
    std::optional<double> eta; // defaults to channel.pl_exponent
    double max_radius_m = 50.0;
    double ring_width_m = 5.0;
    double cell_angle_deg = 10.0;
    std::size_t dwell_epochs = 1;
    std::size_t threads = 0; // 0: hardware concurrency
    std::vector<double> psl_db = {0.0, 5.0, 10.0, 15.0, 20.28, 25.0, 30.0, 35.0, 40.28};
    std::vector<double> beamwidths_deg = {10.0, 20.0, 30.0};
    std::vector<double> blocker_radii_m = {0.5, 1.0, 2.0};

    bool operator==(const EvalSpec&) const = default;
};

struct ExperimentConfig
{
    NetworkConfig network;
    ChannelParams channel; // blockage_sigma_deg is derived from blocker.r_b_m
    AntennaSpec antenna_rx{10.0, std::nullopt, std::nullopt};
    AntennaSpec antenna_tx{135.0, std::nullopt, std::nullopt};
    SensingSpec sensing;
    BandChoice bands;
    DetectorConfig detector;
    BlockerSpec blocker;
    EvalSpec eval;
    std::uint64_t seed = 1;

    AntennaPattern rx_pattern() const;
    AntennaPattern tx_pattern() const;
    double eta() const { return eval.eta.value_or(channel.pl_exponent); }

    /// Sets r_B and the matching sigma_B.
    void set_blocker_radius(double r_b_m);
    /// Sets the receive beamwidth, re-derives the default gains and makes
    /// the sector width equal to the beamwidth.
    void set_rx_beamwidth(double beamwidth_deg);
    /// Keeps the main-lobe gain and sets the side-lobe gain for the given PSL.
    void set_rx_psl_db(double psl_db);

    /// Throws ConfigError naming the first offending key.
    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

/// Parses JSON text; omitted keys keep their defaults, unknown keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string dump_config(const ExperimentConfig& config);
void save_config(const ExperimentConfig& config, const std::string& path);

} // namespace sidelobe
