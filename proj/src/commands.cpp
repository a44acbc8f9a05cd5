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

#include "sidelobe/commands.hpp"

#include "sidelobe/angles.hpp"
#include "sidelobe/evaluation.hpp"
#include "sidelobe/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace sidelobe {

namespace fs = std::filesystem;

namespace {

using Files = std::vector<fs::path>;

void emit(Files& files, const fs::path& path, const std::function<void(std::ostream&)>& body)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    body(os);
    os.flush();
    if (!os)
        throw std::runtime_error("write failed: " + path.string());
    files.push_back(path);
}

std::string tag(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void write_summary_csv(std::ostream& os, const EvalResult& res)
{
    os.precision(12);
    os << "mu,wmae_deg,ci95_deg,n_trials,detection_rate\n";
    for (const auto& w : res.wmae_by_mu) {
        os << w.mu << ',';
        if (w.value)
            os << *w.value;
        os << ',' << w.ci95 << ',' << w.n_trials << ',' << res.detection_rate << '\n';
    }
}

void emit_cells(Files& files, const fs::path& dir, const std::string& stem, const EvalResult& res,
                const std::string& title)
{
    emit(files, dir / (stem + ".csv"), [&](std::ostream& os) { write_cells_csv(os, res); });
    emit(files, dir / (stem + ".svg"), [&](std::ostream& os) { write_polar_heatmap_svg(os, res.per_cell, title); });
}

fs::path prepare(const fs::path& out_dir)
{
    fs::create_directories(out_dir);
    return out_dir;
}

} // namespace

ExperimentConfig resolve_config(ExperimentConfig config, const RunOptions& options)
{
    if (options.seed) {
        config.seed = *options.seed;
        config.network.seed = *options.seed;
    }
    if (options.trials)
        config.eval.n_trials = *options.trials;
    config.validate();
    return config;
}

DemoRun run_demo(const ExperimentConfig& config)
{
    config.validate();
    Rng rng(config.seed);

    DemoRun run;
    run.deployment = build_deployment(config.network, rng);
    const Scene scene = make_scene(run.deployment, config.rx_pattern(), config.tx_pattern(), config.channel, rng);
    run.link_boresight_deg = scene.link_boresight_deg();
    const SectorPartition partition = SectorPartition::uniform(config.sensing.n_sectors, run.link_boresight_deg);

    // start 10-40 deg off the link at 5-20 m, turning toward it
    const RandomMotionLaw& law = config.blocker.motion;
    std::uniform_real_distribution<double> offset(10.0, 40.0);
    std::uniform_real_distribution<double> range(5.0, 20.0);
    std::uniform_real_distribution<double> speed(0.5 * law.max_angular_velocity_deg_s,
                                                 law.max_angular_velocity_deg_s);
    std::uniform_real_distribution<double> radial(-law.max_radial_velocity_m_s, law.max_radial_velocity_m_s);
    const double side = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;

    BlockerState s;
    s.radius_m = config.blocker.r_b_m;
    s.bearing_deg = wrap_deg(run.link_boresight_deg + side * offset(rng));
    s.distance_m = std::clamp(range(rng), law.d_min_m, law.d_max_m);
    s.angular_velocity_deg_s = -side * speed(rng);
    s.radial_velocity_m_s = radial(rng);
    s.hold_remaining_s = law.hold_s;

    SensingHistory history(partition.n_sectors);
    run.trajectory.reserve(config.blocker.demo_epochs);
    for (std::size_t t = 0; t < config.blocker.demo_epochs; ++t) {
        if (t > 0)
            s = step_random(s, config.blocker.dt_s, rng, law);
        run.trajectory.push_back(s);
        history.append(sinr_row_db(scene, draw_epoch(scene, rng), s, partition));
    }

    run.matrix = build_sensing_matrix(history, config.blocker.demo_epochs - 1, config.sensing.tau, partition);
    run.signature = extract_signature(run.matrix, config.bands, config.detector);
    return run;
}

std::vector<fs::path> cmd_demo(const ExperimentConfig& config, const fs::path& out_dir)
{
    const fs::path dir = prepare(out_dir);
    const DemoRun run = run_demo(config);

    auto estimates = run.signature.estimates;
    std::sort(estimates.begin(), estimates.end(),
              [](const AngularEstimate& a, const AngularEstimate& b) { return a.epoch < b.epoch; });

    Eigen::MatrixXd strength = run.signature.split.signature;
    for (Eigen::Index i = 0; i < strength.size(); ++i)
        strength.data()[i] = signature_strength(strength.data()[i], config.detector.strength);

    Files files;
    emit(files, dir / "deployment.csv", [&](std::ostream& os) { write_deployment_csv(os, run.deployment); });
    emit(files, dir / "sensing_matrix.csv", [&](std::ostream& os) { write_sensing_csv(os, run.matrix); });
    emit(files, dir / "signature.csv", [&](std::ostream& os) {
        write_signature_csv(os, run.matrix, run.signature, config.detector.strength);
    });
    emit(files, dir / "trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, run.trajectory); });
    emit(files, dir / "estimates.csv", [&](std::ostream& os) { write_estimates_csv(os, estimates); });

    emit(files, dir / "deployment.svg", [&](std::ostream& os) {
        write_deployment_svg(os, run.deployment, run.trajectory, run.link_boresight_deg);
    });
    emit(files, dir / "sensing_matrix.svg", [&](std::ostream& os) {
        write_matrix_heatmap_svg(os, run.matrix.values_db, "Sensing matrix, SINR [dB]", "row (0 = newest epoch)",
                                 "sector");
    });
    emit(files, dir / "signature.svg", [&](std::ostream& os) {
        write_matrix_heatmap_svg(os, strength, "Signature strength", "row (0 = newest epoch)", "sector");
    });
    emit(files, dir / "trajectory.svg",
         [&](std::ostream& os) { write_trajectory_svg(os, run.trajectory, estimates); });
    emit(files, dir / "config.json", [&](std::ostream& os) { os << dump_config(config); });
    return files;
}

std::vector<fs::path> cmd_grid(const ExperimentConfig& config, const fs::path& out_dir)
{
    const fs::path dir = prepare(out_dir);
    const EvalResult res = run_grid_eval(config, config.eval.n_trials, config.seed);

    Files files;
    emit_cells(files, dir, "cells", res, "Per-cell MAE [deg]");
    emit(files, dir / "summary.csv", [&](std::ostream& os) { write_summary_csv(os, res); });
    emit(files, dir / "config.json", [&](std::ostream& os) { os << dump_config(config); });
    return files;
}

std::vector<fs::path> cmd_sweep_psl(const ExperimentConfig& config, const fs::path& out_dir)
{
    const fs::path dir = prepare(out_dir);
    const auto results = sweep(config, SweepAxis::psl, config.eval.psl_db, config.eval.n_trials, config.seed);

    Files files;
    emit(files, dir / "sweep_psl.csv", [&](std::ostream& os) { write_sweep_csv(os, results); });
    emit(files, dir / "sweep_psl.svg",
         [&](std::ostream& os) { write_sweep_svg(os, results, "PSL [dB]", "wMAE against peak side-lobe gain"); });
    for (const auto& [psl, res] : results)
        emit_cells(files, dir, "cells_psl_" + tag(psl), res, "Per-cell MAE [deg], PSL " + tag(psl) + " dB");
    emit(files, dir / "config.json", [&](std::ostream& os) { os << dump_config(config); });
    return files;
}

std::vector<fs::path> cmd_sweep_bw_size(const ExperimentConfig& config, const fs::path& out_dir)
{
    const fs::path dir = prepare(out_dir);
    const auto& radii = config.eval.blocker_radii_m;

    Files files;
    std::vector<std::pair<double, std::vector<std::pair<double, EvalResult>>>> all;
    for (double bw : config.eval.beamwidths_deg) {
        const ExperimentConfig base = apply_axis(config, SweepAxis::beamwidth, bw);
        auto results = sweep(base, SweepAxis::blocker_radius, radii, config.eval.n_trials, config.seed);

        const std::string stem = "sweep_radius_bw_" + tag(bw);
        emit(files, dir / (stem + ".csv"), [&](std::ostream& os) { write_sweep_csv(os, results); });
        emit(files, dir / (stem + ".svg"), [&](std::ostream& os) {
            write_sweep_svg(os, results, "blocker radius [m]", "wMAE against blocker size, beamwidth " + tag(bw) + " deg");
        });
        for (const auto& [rb, res] : results)
            emit_cells(files, dir, "cells_bw_" + tag(bw) + "_rb_" + tag(rb), res,
                       "Per-cell MAE [deg], beamwidth " + tag(bw) + " deg, r_B " + tag(rb) + " m");
        all.emplace_back(bw, std::move(results));
    }

    emit(files, dir / "sweep_bw_size.csv", [&](std::ostream& os) {
        os.precision(12);
        os << "beamwidth_deg,blocker_radius_m,mu,wmae_deg,ci95_deg,detection_rate\n";
        for (const auto& [bw, results] : all)
            for (const auto& [rb, res] : results)
                for (const auto& w : res.wmae_by_mu) {
                    os << bw << ',' << rb << ',' << w.mu << ',';
                    if (w.value)
                        os << *w.value;
                    os << ',' << w.ci95 << ',' << res.detection_rate << '\n';
                }
    });
    emit(files, dir / "config.json", [&](std::ostream& os) { os << dump_config(config); });
    return files;
}

} // namespace sidelobe
