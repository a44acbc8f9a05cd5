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

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <vector>

namespace sidelobe {

/// n+1 contiguous sectors of width 2*alpha. Sector k is centred on
/// reference - 2 k alpha and spans [phi_k - alpha, phi_k + alpha).
struct SectorPartition
{
    std::size_t n_sectors = 36;
    double half_width_deg = 5.0;
    double reference_deg = 0.0; // orientation of sector 0 (reference link boresight)

    static SectorPartition uniform(std::size_t n_sectors, double reference_deg);

    void validate() const;
    double orientation_deg(std::size_t k) const;
    std::vector<double> orientations_deg() const;
    bool operator==(const SectorPartition&) const = default;
};

std::size_t sector_of(const SectorPartition& partition, double aoa_deg);

/// Everything about a deployment that stays fixed during one trial, as seen
/// from the reference BS.
struct Scene
{
    Deployment deployment;
    ChannelParams channel;
    AntennaPattern rx;                       // reference BS, boresight on the reference UE
    std::vector<AntennaPattern> ue_tx;       // per UE, boresight on its serving BS
    std::vector<LinkGeometry> to_reference;  // per UE, UE -> reference BS
    std::vector<double> static_shadow_db;    // per UE, drawn once

    double link_boresight_deg() const { return rx.boresight_deg; }
    double reference_distance_m() const { return to_reference.at(deployment.typical_ue).distance_m; }
    /// Absolute arrival bearing of UE i at the reference BS.
    double arrival_bearing_deg(std::size_t ue) const;
};

/// Aligns every UE beam on its serving BS and the reference BS beam on the
/// reference UE; draws static shadowing per link.
Scene make_scene(const Deployment& deployment, const AntennaPattern& rx_template,
                 const AntennaPattern& tx_template, const ChannelParams& channel, Rng& rng);

/// Per-epoch small-scale fading, one coefficient per UE.
struct EpochState
{
    std::vector<double> fading;
};

EpochState draw_epoch(const Scene& scene, Rng& rng);
/// Unit fading on every link.
EpochState quiet_epoch(const Scene& scene);

/// Reference-link signal power in mW (the shared numerator of every sector SINR).
double signal_power_mw(const Scene& scene, const EpochState& epoch,
                       const std::optional<BlockerState>& blocker);

/// Interference power from UE \p ue at the reference BS, in mW.
double interference_from_mw(const Scene& scene, const EpochState& epoch,
                            const std::optional<BlockerState>& blocker, std::size_t ue);

/// Interference binned by arrival sector, in mW.
std::vector<double> interference_by_sector_mw(const Scene& scene, const EpochState& epoch,
                                              const std::optional<BlockerState>& blocker,
                                              const SectorPartition& partition);

double sector_interference_mw(const Scene& scene, const EpochState& epoch,
                              const std::optional<BlockerState>& blocker,
                              const SectorPartition& partition, std::size_t sector_k);

/// Linear signal-to-sector-interference-plus-noise ratio.
double sector_sinr(const Scene& scene, const EpochState& epoch,
                   const std::optional<BlockerState>& blocker,
                   const SectorPartition& partition, std::size_t sector_k);

/// All sector SINRs of one epoch in dB.
std::vector<double> sinr_row_db(const Scene& scene, const EpochState& epoch,
                                const std::optional<BlockerState>& blocker,
                                const SectorPartition& partition);

/// Append-only per-epoch store of sector SINR rows (dB).
class SensingHistory
{
public:
    explicit SensingHistory(std::size_t n_sectors) : n_sectors_(n_sectors) {}

    void append(std::vector<double> row_db);
    std::size_t size() const { return rows_.size(); }
    std::size_t n_sectors() const { return n_sectors_; }
    const std::vector<double>& row(std::size_t epoch) const { return rows_.at(epoch); }

private:
    std::size_t n_sectors_;
    std::vector<std::vector<double>> rows_;
};

/// (tau+1) x (n+1) window, newest epoch in row 0. Values are SINR in dB.
struct SensingMatrix
{
    Eigen::MatrixXd values_db;
    std::vector<std::size_t> epoch_of_row;
    SectorPartition partition;

    Eigen::MatrixXd linear() const;
};

SensingMatrix build_sensing_matrix(const SensingHistory& history, std::size_t t, std::size_t tau,
                                   const SectorPartition& partition);

/// Probability of at least one UE in a sector of half-width alpha on a
/// disc of radius R: 1 - exp(-lambda alpha R^2).
double interferer_presence_prob(double ue_density, double half_width_rad, double radius_m);

/// CSV columns: epoch,sector_index,sector_orientation_deg,gamma_db.
void write_sensing_csv(std::ostream& os, const SensingMatrix& matrix);

} // namespace sidelobe
