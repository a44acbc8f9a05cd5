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

#include "sidelobe/commands.hpp"
#include "sidelobe/evaluation.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sidelobe;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t lines(const fs::path& p)
{
    std::ifstream in(p);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);)
        ++n;
    return n;
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("sidelobe_cmd_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig quick_eval()
{
    ExperimentConfig cfg;
    cfg.eval.max_radius_m = 10.0;
    cfg.eval.n_trials = 2;
    cfg.eval.psl_db = {10.0, 20.28};
    cfg.eval.beamwidths_deg = {10.0, 20.0};
    cfg.eval.blocker_radii_m = {1.0, 2.0};
    return cfg;
}

} // namespace

TEST_CASE("overrides")
{
    const ExperimentConfig base;
    const ExperimentConfig same = resolve_config(base, {});
    CHECK(same == base);
    const ExperimentConfig o = resolve_config(base, {9, 4});
    CHECK(o.seed == 9);
    CHECK(o.network.seed == 9);
    CHECK(o.eval.n_trials == 4);
    CHECK_THROWS_AS(resolve_config(base, {std::nullopt, 0}), ConfigError);
}

TEST_CASE("demo artifacts")
{
    const ExperimentConfig cfg;
    const fs::path a = scratch_dir("demo_a");
    const fs::path b = scratch_dir("demo_b");
    const auto files = cmd_demo(cfg, a);
    const auto again = cmd_demo(resolve_config(cfg, {cfg.seed, std::nullopt}), b);

    std::size_t csv = 0;
    std::size_t svg = 0;
    REQUIRE(files.size() == again.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        CHECK(fs::exists(files[i]));
        CHECK(files[i].filename() == again[i].filename());
        CHECK(slurp(files[i]) == slurp(again[i])); // default seed and explicit seed agree, bit for bit
        csv += files[i].extension() == ".csv";
        svg += files[i].extension() == ".svg";
    }
    CHECK(csv >= 5);
    CHECK(svg >= 4);

    // 51 x 36 entries in long form plus a header
    CHECK(lines(a / "sensing_matrix.csv") == 51 * 36 + 1);
    CHECK(lines(a / "signature.csv") == 51 * 36 + 1);
    CHECK(lines(a / "trajectory.csv") == cfg.blocker.demo_epochs + 1);

    ExperimentConfig other = cfg;
    other.seed = other.network.seed = 2;
    const fs::path c = scratch_dir("demo_c");
    cmd_demo(other, c);
    CHECK(slurp(a / "sensing_matrix.csv") != slurp(c / "sensing_matrix.csv"));

    fs::remove_all(a);
    fs::remove_all(b);
    fs::remove_all(c);
}

TEST_CASE("demo estimates follow the blocker near the reference BS")
{
    // sector-centre estimates quantise to 10 deg, so a correct sector means
    // an error of at most 5 deg
    std::size_t detected = 0;
    std::size_t within5 = 0;
    std::size_t within15 = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        ExperimentConfig cfg;
        cfg.seed = cfg.network.seed = seed;
        const DemoRun run = run_demo(cfg);
        for (const AngularEstimate& e : run.signature.estimates) {
            const BlockerState& s = run.trajectory.at(e.epoch);
            if (s.distance_m > 20.0 || !e.bearing_deg)
                continue;
            ++detected;
            const double err = circular_error_deg(*e.bearing_deg, s.bearing_deg);
            within5 += err <= 5.0;
            within15 += err <= 15.0;
        }
    }
    REQUIRE(detected > 200);
    CHECK(static_cast<double>(within5) / detected > 0.6);
    CHECK(static_cast<double>(within15) / detected > 0.8);
}

TEST_CASE("grid and sweep artifacts")
{
    const ExperimentConfig cfg = quick_eval();
    const std::size_t n_cells = 2 * 36;

    SECTION("grid")
    {
        const fs::path dir = scratch_dir("grid");
        cmd_grid(cfg, dir);
        CHECK(lines(dir / "cells.csv") == n_cells + 1);
        CHECK(lines(dir / "summary.csv") == cfg.eval.mu.size() + 1);
        CHECK(fs::exists(dir / "cells.svg"));
        CHECK(fs::exists(dir / "config.json"));
        fs::remove_all(dir);
    }
    SECTION("PSL sweep")
    {
        const fs::path dir = scratch_dir("psl");
        cmd_sweep_psl(cfg, dir);
        CHECK(lines(dir / "sweep_psl.csv") == cfg.eval.psl_db.size() * cfg.eval.mu.size() + 1);
        CHECK(fs::exists(dir / "sweep_psl.svg"));
        CHECK(fs::exists(dir / "cells_psl_20.28.svg"));
        fs::remove_all(dir);
    }
    SECTION("beamwidth and blocker size")
    {
        const fs::path dir = scratch_dir("bw");
        cmd_sweep_bw_size(cfg, dir);
        CHECK(lines(dir / "sweep_bw_size.csv") == 2 * 2 * cfg.eval.mu.size() + 1);
        CHECK(lines(dir / "sweep_radius_bw_10.csv") == 2 * cfg.eval.mu.size() + 1);
        // 20 deg cells still tile the same 10 deg evaluation grid
        CHECK(lines(dir / "cells_bw_20_rb_2.csv") == n_cells + 1);
        fs::remove_all(dir);
    }
}
