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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "scenes.hpp"

#include "sidelobe/angles.hpp"
#include "sidelobe/sensing.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

using namespace sidelobe;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

/// Reference link along +x plus a single interferer at (x, y) served by a BS
/// placed so that the interferer's transmit boresight points at \p aim.
Scene single_interferer(Point ue, Point serving)
{
    Deployment dep;
    dep.bs_positions = {{0.0, 0.0}, serving};
    dep.ue_positions = {{20.0, 0.0}, ue};
    dep.association = {0, 1};
    ChannelParams ch;
    ch.nakagami_m = std::numeric_limits<double>::infinity();
    Rng rng(1);
    return make_scene(dep, default_rx_pattern(), default_tx_pattern(), ch, rng);
}

} // namespace

TEST_CASE("sector partition orientation and membership")
{
    const SectorPartition p = SectorPartition::uniform(36, 40.0);
    CHECK(p.half_width_deg == 5.0);
    CHECK_THAT(p.orientation_deg(0), WithinAbs(40.0, 1e-12));
    CHECK_THAT(p.orientation_deg(1), WithinAbs(30.0, 1e-12));

    CHECK(sector_of(p, 40.0) == 0);
    CHECK(sector_of(p, 30.0) == 1);
    // half-open: the +alpha edge belongs to the neighbour, the -alpha edge to sector 0
    CHECK(sector_of(p, 45.0) == 35);
    CHECK(sector_of(p, 35.0) == 0);
    CHECK(sector_of(p, 40.0 + 360.0) == 0);
    CHECK_THROWS_AS(SectorPartition::uniform(0, 0.0), std::invalid_argument);
}

TEST_CASE("every angle falls in exactly one sector, the nearest orientation")
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-720.0, 720.0);
    for (std::size_t n : {1u, 4u, 12u, 36u}) {
        const SectorPartition p = SectorPartition::uniform(n, u(rng));
        for (int i = 0; i < 3000; ++i) {
            const double a = u(rng);
            const std::size_t k = sector_of(p, a);
            REQUIRE(k < n);
            CHECK(angular_distance_deg(a, p.orientation_deg(k)) <= p.half_width_deg + 1e-9);
        }
    }
}

TEST_CASE("empty sector sees only noise")
{
    const Scene s = single_interferer({-30.0, 0.0}, {-60.0, 0.0}); // interferer faces away
    const SectorPartition p = SectorPartition::uniform(36, s.link_boresight_deg());
    const EpochState q = quiet_epoch(s);
    for (std::size_t k = 0; k < 36; ++k)
        CHECK(sector_interference_mw(s, q, std::nullopt, p, k) == 0.0);
    const double snr = sector_sinr(s, q, std::nullopt, p, 10);
    CHECK_THAT(snr, WithinRel(signal_power_mw(s, q, std::nullopt) / s.channel.noise_power_mw(), 1e-12));
    CHECK_THAT(s.channel.noise_power_dbm(), WithinAbs(-87.98, 0.01));
}

TEST_CASE("single interferer power matches a direct link budget")
{
    // interferer at (0, 40), served by a BS further out on the same line
    // beyond the origin so that its boresight points at the reference BS
    const Scene s = single_interferer({0.0, 40.0}, {0.0, -10.0});
    const SectorPartition p = SectorPartition::uniform(36, s.link_boresight_deg());
    const EpochState q = quiet_epoch(s);

    const AntennaPattern tx = default_tx_pattern();
    const AntennaPattern rx = default_rx_pattern();
    const double pl = 60.1 + 14.0 * std::log10(40.0 / 1000.0);
    const double dbm = 19.6 + 10.0 * std::log10(tx.main_gain) + 10.0 * std::log10(rx.side_gain) - pl;
    const std::size_t k = sector_of(p, 90.0);
    CHECK(k == 27);
    CHECK_THAT(sector_interference_mw(s, q, std::nullopt, p, k), WithinRel(std::pow(10.0, dbm / 10.0), 1e-9));

    SECTION("full blockage scales the sector power by 1e-10")
    {
        BlockerState b;
        b.distance_m = 10.0;
        b.bearing_deg = 90.0;
        const double blocked = sector_interference_mw(s, q, b, p, k);
        CHECK_THAT(blocked / sector_interference_mw(s, q, std::nullopt, p, k), WithinRel(1e-10, 1e-9));
    }
    SECTION("a blocker beyond the interferer has no effect")
    {
        BlockerState b;
        b.distance_m = 45.0;
        b.bearing_deg = 90.0;
        CHECK(sector_interference_mw(s, q, b, p, k) == sector_interference_mw(s, q, std::nullopt, p, k));
    }
}

TEST_CASE("interference of the reference UE is never counted")
{
    const Scene s = single_interferer({0.0, 40.0}, {0.0, -10.0});
    CHECK(interference_from_mw(s, quiet_epoch(s), std::nullopt, s.deployment.typical_ue) == 0.0);
}

TEST_CASE("blocking the reference link lowers every sector together")
{
    const auto ring = scenes::sector_ring(30.0);
    const EpochState q = quiet_epoch(ring.scene);
    BlockerState b;
    b.distance_m = 10.0;
    b.bearing_deg = 0.0;
    const auto clear = sinr_row_db(ring.scene, q, std::nullopt, ring.partition);
    const auto blocked = sinr_row_db(ring.scene, q, b, ring.partition);
    // sector 0 shares the blocked direction with its own interferer; the
    // others only lose the signal (neighbours see ~4e-4 dB of tail)
    for (std::size_t k = 1; k < 36; ++k)
        CHECK_THAT(blocked[k] - clear[k], WithinAbs(-100.0, 1e-3));
}

TEST_CASE("blocking a sector's sole interferer raises only that sector")
{
    const auto ring = scenes::sector_ring(5.0);
    const EpochState q = quiet_epoch(ring.scene);
    const auto clear = sinr_row_db(ring.scene, q, std::nullopt, ring.partition);
    for (std::size_t k = 0; k < 36; ++k) {
        BlockerState b;
        b.distance_m = 10.0;
        b.bearing_deg = ring.partition.orientation_deg(k);
        const auto row = sinr_row_db(ring.scene, q, b, ring.partition);
        CHECK(row[k] > clear[k] + 10.0);
        for (std::size_t j = 0; j < 36; ++j)
            if (j != k)
                CHECK_THAT(row[j], WithinAbs(clear[j], 1e-3));
    }
}

TEST_CASE("sensing matrix shape and row order")
{
    const auto ring = scenes::sector_ring();
    SensingHistory h(36);
    const EpochState q = quiet_epoch(ring.scene);
    for (int t = 0; t < 60; ++t)
        h.append(sinr_row_db(ring.scene, q, std::nullopt, ring.partition));

    const SensingMatrix m = build_sensing_matrix(h, 59, 50, ring.partition);
    CHECK(m.values_db.rows() == 51);
    CHECK(m.values_db.cols() == 36);
    CHECK(m.epoch_of_row.front() == 59);
    CHECK(m.epoch_of_row.back() == 9);
    // static scene without fading: identical rows
    for (Eigen::Index r = 1; r < m.values_db.rows(); ++r)
        CHECK(m.values_db.row(r) == m.values_db.row(0));
    CHECK_THAT(m.linear()(0, 3), WithinRel(std::pow(10.0, m.values_db(0, 3) / 10.0), 1e-12));

    CHECK(build_sensing_matrix(h, 0, 0, ring.partition).values_db.rows() == 1);
    CHECK_THROWS_AS(build_sensing_matrix(h, 10, 50, ring.partition), std::invalid_argument);
    CHECK_THROWS_AS(build_sensing_matrix(h, 60, 50, ring.partition), std::invalid_argument);
    CHECK_THROWS_AS(h.append(std::vector<double>(35, 0.0)), std::invalid_argument);
}

TEST_CASE("fading draws are unit-mean per UE")
{
    NetworkConfig net;
    Rng rng(2);
    const Deployment dep = build_deployment(net, rng);
    const Scene s = make_scene(dep, default_rx_pattern(), default_tx_pattern(), ChannelParams{}, rng);
    double sum = 0.0;
    std::size_t n = 0;
    for (int i = 0; i < 2000; ++i)
        for (double f : draw_epoch(s, rng).fading) {
            sum += f;
            ++n;
        }
    CHECK_THAT(sum / static_cast<double>(n), WithinAbs(1.0, 0.02));
}

TEST_CASE("interferer presence probability")
{
    CHECK(interferer_presence_prob(0.0, deg_to_rad(5.0), 100.0) == 0.0);
    CHECK_THAT(interferer_presence_prob(1.5e-3, deg_to_rad(5.0), 100.0),
               WithinRel(oracle::sector_occupancy(1.5e-3, deg_to_rad(5.0), 100.0), 1e-14));
    CHECK_THAT(interferer_presence_prob(1.5e-3, deg_to_rad(5.0), 100.0), WithinAbs(0.730, 5e-4));
    CHECK_THAT(interferer_presence_prob(1.5e-3, std::numbers::pi, 100.0), WithinAbs(1.0, 1e-12));
    CHECK_THROWS_AS(interferer_presence_prob(-1.0, 0.1, 1.0), std::invalid_argument);
}

TEST_CASE("sensing CSV columns")
{
    SensingMatrix m;
    m.values_db = Eigen::MatrixXd::Constant(2, 2, 3.5);
    m.epoch_of_row = {7, 6};
    m.partition = SectorPartition::uniform(2, 0.0);
    std::ostringstream os;
    write_sensing_csv(os, m);
    CHECK(os.str() == "epoch,sector_index,sector_orientation_deg,gamma_db\n7,0,0,3.5\n7,1,180,3.5\n6,0,0,3.5\n6,1,180,3.5\n");
}
