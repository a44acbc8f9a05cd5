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

#include "sidelobe/sensing.hpp"

#include "sidelobe/angles.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sidelobe {

SectorPartition SectorPartition::uniform(std::size_t n_sectors, double reference_deg)
{
    if (n_sectors == 0)
        throw std::invalid_argument("SectorPartition: need at least one sector");
    SectorPartition p;
    p.n_sectors = n_sectors;
    p.half_width_deg = 180.0 / static_cast<double>(n_sectors);
    p.reference_deg = wrap_deg(reference_deg);
    return p;
}

void SectorPartition::validate() const
{
    if (n_sectors == 0)
        throw std::invalid_argument("SectorPartition: need at least one sector");
    if (std::abs(2.0 * half_width_deg * static_cast<double>(n_sectors) - 360.0) > 1e-9)
        throw std::invalid_argument("SectorPartition: sectors must tile 360 degrees");
}

double SectorPartition::orientation_deg(std::size_t k) const
{
    return wrap_deg(reference_deg - 2.0 * static_cast<double>(k) * half_width_deg);
}

std::vector<double> SectorPartition::orientations_deg() const
{
    std::vector<double> out(n_sectors);
    for (std::size_t k = 0; k < n_sectors; ++k)
        out[k] = orientation_deg(k);
    return out;
}

std::size_t sector_of(const SectorPartition& partition, double aoa_deg)
{
    // Sector k holds the clockwise offsets y = reference - aoa in (2k alpha - alpha, 2k alpha + alpha].
    const double width = 2.0 * partition.half_width_deg;
    const double z = wrap_deg_360(partition.reference_deg - aoa_deg + partition.half_width_deg);
    if (z == 0.0)
        return partition.n_sectors - 1;
    auto k = static_cast<std::size_t>(std::ceil(z / width));
    return k == 0 ? 0 : std::min(k - 1, partition.n_sectors - 1);
}

double Scene::arrival_bearing_deg(std::size_t ue) const
{
    return wrap_deg(rx.boresight_deg + to_reference.at(ue).aoa_deg);
}

Scene make_scene(const Deployment& deployment, const AntennaPattern& rx_template,
                 const AntennaPattern& tx_template, const ChannelParams& channel, Rng& rng)
{
    rx_template.validate();
    tx_template.validate();
    channel.validate();

    Scene scene;
    scene.deployment = deployment;
    scene.channel = channel;

    const Point bs0 = deployment.reference_bs();
    scene.rx = rx_template;
    scene.rx.boresight_deg = bearing_deg(bs0, deployment.reference_ue());

    const std::size_t n_ue = deployment.ue_positions.size();
    scene.ue_tx.reserve(n_ue);
    scene.to_reference.reserve(n_ue);
    scene.static_shadow_db.reserve(n_ue);
    for (std::size_t u = 0; u < n_ue; ++u) {
        const Point ue = deployment.ue_positions[u];
        AntennaPattern tx = tx_template;
        tx.boresight_deg = bearing_deg(ue, deployment.bs_positions.at(deployment.association[u]));
        scene.ue_tx.push_back(tx);
        scene.to_reference.push_back(link_geometry(ue, bs0, tx.boresight_deg, scene.rx.boresight_deg));
        scene.static_shadow_db.push_back(shadow_sample(channel, rng));
    }
    return scene;
}

EpochState draw_epoch(const Scene& scene, Rng& rng)
{
    EpochState e;
    e.fading.resize(scene.ue_tx.size());
    for (double& f : e.fading)
        f = fading_sample(scene.channel.nakagami_m, rng);
    return e;
}

EpochState quiet_epoch(const Scene& scene)
{
    return EpochState{std::vector<double>(scene.ue_tx.size(), 1.0)};
}

namespace {

std::optional<double> blocker_separation(const Scene& scene, const std::optional<BlockerState>& blocker,
                                         std::size_t ue)
{
    if (!blocker)
        return std::nullopt;
    const LinkGeometry& g = scene.to_reference[ue];
    if (!blocker_occludes(blocker->distance_m, blocker->radius_m, g.distance_m))
        return std::nullopt;
    return angular_distance_deg(scene.arrival_bearing_deg(ue), blocker->bearing_deg);
}

double link_power_mw(const Scene& scene, const EpochState& epoch,
                     const std::optional<BlockerState>& blocker, std::size_t ue)
{
    const LinkState link{scene.static_shadow_db[ue], epoch.fading.at(ue)};
    const double dbm = received_power_dbm(scene.ue_tx[ue], scene.rx, scene.to_reference[ue], link,
                                          blocker_separation(scene, blocker, ue), scene.channel);
    return std::isinf(dbm) ? 0.0 : db_to_linear(dbm);
}

} // namespace

double signal_power_mw(const Scene& scene, const EpochState& epoch,
                       const std::optional<BlockerState>& blocker)
{
    return link_power_mw(scene, epoch, blocker, scene.deployment.typical_ue);
}

double interference_from_mw(const Scene& scene, const EpochState& epoch,
                            const std::optional<BlockerState>& blocker, std::size_t ue)
{
    if (ue == scene.deployment.typical_ue)
        return 0.0;
    return link_power_mw(scene, epoch, blocker, ue);
}

std::vector<double> interference_by_sector_mw(const Scene& scene, const EpochState& epoch,
                                              const std::optional<BlockerState>& blocker,
                                              const SectorPartition& partition)
{
    std::vector<double> sectors(partition.n_sectors, 0.0);
    for (std::size_t u = 0; u < scene.ue_tx.size(); ++u) {
        if (u == scene.deployment.typical_ue)
            continue;
        const double p = interference_from_mw(scene, epoch, blocker, u);
        if (p > 0.0)
            sectors[sector_of(partition, scene.arrival_bearing_deg(u))] += p;
    }
    return sectors;
}

double sector_interference_mw(const Scene& scene, const EpochState& epoch,
                              const std::optional<BlockerState>& blocker,
                              const SectorPartition& partition, std::size_t sector_k)
{
    if (sector_k >= partition.n_sectors)
        throw std::out_of_range("sector_interference_mw: sector index out of range");
    double sum = 0.0;
    for (std::size_t u = 0; u < scene.ue_tx.size(); ++u) {
        if (u == scene.deployment.typical_ue
            || sector_of(partition, scene.arrival_bearing_deg(u)) != sector_k)
            continue;
        sum += interference_from_mw(scene, epoch, blocker, u);
    }
    return sum;
}

double sector_sinr(const Scene& scene, const EpochState& epoch,
                   const std::optional<BlockerState>& blocker,
                   const SectorPartition& partition, std::size_t sector_k)
{
    return signal_power_mw(scene, epoch, blocker)
           / (sector_interference_mw(scene, epoch, blocker, partition, sector_k)
              + scene.channel.noise_power_mw());
}

std::vector<double> sinr_row_db(const Scene& scene, const EpochState& epoch,
                                const std::optional<BlockerState>& blocker,
                                const SectorPartition& partition)
{
    const double s = signal_power_mw(scene, epoch, blocker);
    const double n = scene.channel.noise_power_mw();
    std::vector<double> row = interference_by_sector_mw(scene, epoch, blocker, partition);
    for (double& v : row)
        v = linear_to_db(s / (v + n));
    return row;
}

void SensingHistory::append(std::vector<double> row_db)
{
    if (row_db.size() != n_sectors_)
        throw std::invalid_argument("SensingHistory: row width does not match sector count");
    rows_.push_back(std::move(row_db));
}

Eigen::MatrixXd SensingMatrix::linear() const
{
    return values_db.unaryExpr([](double v) { return db_to_linear(v); });
}

SensingMatrix build_sensing_matrix(const SensingHistory& history, std::size_t t, std::size_t tau,
                                   const SectorPartition& partition)
{
    partition.validate();
    if (partition.n_sectors != history.n_sectors())
        throw std::invalid_argument("build_sensing_matrix: partition does not match history");
    if (t >= history.size() || t < tau)
        throw std::invalid_argument("build_sensing_matrix: history shorter than tau + 1 epochs");

    SensingMatrix m;
    m.partition = partition;
    m.values_db.resize(static_cast<Eigen::Index>(tau + 1), static_cast<Eigen::Index>(partition.n_sectors));
    m.epoch_of_row.resize(tau + 1);
    for (std::size_t r = 0; r <= tau; ++r) {
        const std::size_t epoch = t - r;
        const auto& row = history.row(epoch);
        m.epoch_of_row[r] = epoch;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!std::isfinite(row[k]))
                throw std::domain_error("build_sensing_matrix: non-finite SINR");
            m.values_db(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = row[k];
        }
    }
    return m;
}

double interferer_presence_prob(double ue_density, double half_width_rad, double radius_m)
{
    if (ue_density < 0.0 || half_width_rad < 0.0 || radius_m < 0.0)
        throw std::invalid_argument("interferer_presence_prob: inputs must be non-negative");
    return 1.0 - std::exp(-ue_density * half_width_rad * radius_m * radius_m);
}

void write_sensing_csv(std::ostream& os, const SensingMatrix& matrix)
{
    os.precision(12);
    os << "epoch,sector_index,sector_orientation_deg,gamma_db\n";
    for (Eigen::Index r = 0; r < matrix.values_db.rows(); ++r)
        for (Eigen::Index k = 0; k < matrix.values_db.cols(); ++k)
            os << matrix.epoch_of_row[static_cast<std::size_t>(r)] << ',' << k << ','
               << matrix.partition.orientation_deg(static_cast<std::size_t>(k)) << ','
               << matrix.values_db(r, k) << '\n';
}

} // namespace sidelobe
