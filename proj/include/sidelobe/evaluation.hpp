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

#include "sidelobe/config.hpp"
#include "sidelobe/mobility.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sidelobe {

struct ErrorSample
{
    double true_bearing_deg = 0.0;
    double est_bearing_deg = 0.0; // meaningful only when detected
    double true_distance_m = 0.0;
    bool detected = false;
    std::size_t cell = 0; // grid cell index
};

/// Wrap-aware absolute bearing error in [0, 180].
double circular_error_deg(double true_deg, double est_deg);

/// Distance weight exp(-mu d^eta).
double weight(double distance_m, double mu, double eta);

/// Mean of w(d) * error over the detected samples; nullopt when none was detected.
std::optional<double> wmae(std::span<const ErrorSample> samples, double mu, double eta);

struct CellStat
{
    GridCell cell;
    std::optional<double> mae_deg; // over detected visits, all trials
    std::size_t n_obs = 0;         // detected visits
    std::size_t n_visits = 0;
};

struct WmaeStat
{
    double mu = 0.0;
    std::optional<double> value; // mean over trials with at least one detection
    double ci95 = 0.0;           // normal-approximation half-width
    std::size_t n_trials = 0;    // trials contributing
};

struct EvalResult
{
    std::vector<CellStat> per_cell;
    std::vector<WmaeStat> wmae_by_mu;
    double detection_rate = 0.0;
    std::size_t trials = 0;

    const WmaeStat& at_mu(double mu) const;
    /// Mean per-cell MAE over cells whose centre distance lies in (lo, hi].
    std::optional<double> ring_band_mae(double lo_m, double hi_m) const;
    bool operator==(const EvalResult&) const;
};

/// splitmix64-based per-trial stream seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// One Monte Carlo trial: fresh deployment, the blocker walks the grid
/// (preceded by tau warm-up epochs on the first ring), and each dwell epoch
/// is scored from the newest row of its own sensing window.
std::vector<ErrorSample> run_grid_trial(const ExperimentConfig& config, std::uint64_t trial_seed);

EvalResult aggregate_trials(const ExperimentConfig& config,
                            const std::vector<std::vector<ErrorSample>>& trials);

/// Runs n_trials independent trials (in parallel when threads allow).
EvalResult run_grid_eval(const ExperimentConfig& config, std::size_t n_trials, std::uint64_t master_seed);

enum class SweepAxis { psl, beamwidth, blocker_radius };

SweepAxis parse_sweep_axis(const std::string& name);
std::string to_string(SweepAxis axis);

/// Copy of \p config with one axis set to \p value (validated).
ExperimentConfig apply_axis(const ExperimentConfig& config, SweepAxis axis, double value);

/// One evaluation per value, all with the same master seed.
std::vector<std::pair<double, EvalResult>> sweep(const ExperimentConfig& config, SweepAxis axis,
                                                 const std::vector<double>& values, std::size_t n_trials,
                                                 std::uint64_t master_seed);

/// CSV columns: ring_lo_m,psi_lo_deg,mae_deg,n_obs.
void write_cells_csv(std::ostream& os, const EvalResult& result);

/// CSV columns: axis_value,mu,wmae_deg,ci95_deg,detection_rate.
void write_sweep_csv(std::ostream& os, const std::vector<std::pair<double, EvalResult>>& results);

} // namespace sidelobe
