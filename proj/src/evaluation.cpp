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

#include "sidelobe/evaluation.hpp"

#include "sidelobe/angles.hpp"
#include "sidelobe/sensing.hpp"
#include "sidelobe/signature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace sidelobe {

double circular_error_deg(double true_deg, double est_deg)
{
    return angular_distance_deg(true_deg, est_deg);
}

double weight(double distance_m, double mu, double eta)
{
    if (distance_m < 0.0)
        throw std::invalid_argument("weight: distance must be non-negative");
    if (mu == 0.0)
        return 1.0;
    return std::exp(-mu * std::pow(distance_m, eta));
}

std::optional<double> wmae(std::span<const ErrorSample> samples, double mu, double eta)
{
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& s : samples) {
        if (!s.detected)
            continue;
        sum += weight(s.true_distance_m, mu, eta) * circular_error_deg(s.true_bearing_deg, s.est_bearing_deg);
        ++n;
    }
    if (n == 0)
        return std::nullopt;
    return sum / static_cast<double>(n);
}

const WmaeStat& EvalResult::at_mu(double mu) const
{
    for (const auto& w : wmae_by_mu)
        if (std::abs(w.mu - mu) < 1e-12)
            return w;
    throw std::out_of_range("EvalResult: mu was not evaluated");
}

std::optional<double> EvalResult::ring_band_mae(double lo_m, double hi_m) const
{
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& c : per_cell) {
        const double d = c.cell.center_distance_m();
        if (d > lo_m && d <= hi_m && c.mae_deg) {
            sum += *c.mae_deg;
            ++n;
        }
    }
    if (n == 0)
        return std::nullopt;
    return sum / static_cast<double>(n);
}

bool EvalResult::operator==(const EvalResult& o) const
{
    if (trials != o.trials || detection_rate != o.detection_rate || per_cell.size() != o.per_cell.size()
        || wmae_by_mu.size() != o.wmae_by_mu.size())
        return false;
    for (std::size_t i = 0; i < per_cell.size(); ++i)
        if (!(per_cell[i].cell == o.per_cell[i].cell) || per_cell[i].mae_deg != o.per_cell[i].mae_deg
            || per_cell[i].n_obs != o.per_cell[i].n_obs || per_cell[i].n_visits != o.per_cell[i].n_visits)
            return false;
    for (std::size_t i = 0; i < wmae_by_mu.size(); ++i)
        if (wmae_by_mu[i].mu != o.wmae_by_mu[i].mu || wmae_by_mu[i].value != o.wmae_by_mu[i].value
            || wmae_by_mu[i].ci95 != o.wmae_by_mu[i].ci95 || wmae_by_mu[i].n_trials != o.wmae_by_mu[i].n_trials)
            return false;
    return true;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(master ^ mix(index));
}

std::vector<ErrorSample> run_grid_trial(const ExperimentConfig& config, std::uint64_t trial_seed)
{
    Rng rng(trial_seed);
    const Deployment dep = build_deployment(config.network, rng);
    const Scene scene = make_scene(dep, config.rx_pattern(), config.tx_pattern(), config.channel, rng);
    const SectorPartition partition = SectorPartition::uniform(config.sensing.n_sectors, scene.link_boresight_deg());

    const auto grid = make_grid(config.eval.max_radius_m, config.eval.ring_width_m, config.eval.cell_angle_deg);
    const std::size_t dwell = config.eval.dwell_epochs;
    const std::size_t tau = config.sensing.tau;
    const auto walk = grid_trajectory(grid, dwell, config.blocker.r_b_m);

    // warm-up: already circling the first ring when the scored walk starts
    std::vector<BlockerState> path;
    path.reserve(tau + walk.size());
    const double step_deg = config.eval.cell_angle_deg / static_cast<double>(dwell);
    for (std::size_t w = 0; w < tau; ++w) {
        BlockerState s = walk.front();
        s.bearing_deg = wrap_deg(s.bearing_deg - static_cast<double>(tau - w) * step_deg);
        path.push_back(s);
    }
    path.insert(path.end(), walk.begin(), walk.end());

    SensingHistory history(partition.n_sectors);
    for (const BlockerState& s : path)
        history.append(sinr_row_db(scene, draw_epoch(scene, rng), s, partition));

    std::vector<ErrorSample> samples;
    samples.reserve(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const SensingMatrix m = build_sensing_matrix(history, tau + i, tau, partition);
        const SignatureResult sig = extract_signature(m, config.bands, config.detector);
        const AngularEstimate& newest = sig.estimates.front();

        ErrorSample s;
        s.cell = i / dwell;
        s.true_bearing_deg = walk[i].bearing_deg;
        s.true_distance_m = walk[i].distance_m;
        s.detected = newest.bearing_deg.has_value();
        s.est_bearing_deg = newest.bearing_deg.value_or(0.0);
        samples.push_back(s);
    }
    return samples;
}

EvalResult aggregate_trials(const ExperimentConfig& config,
                            const std::vector<std::vector<ErrorSample>>& trials)
{
    const auto grid = make_grid(config.eval.max_radius_m, config.eval.ring_width_m, config.eval.cell_angle_deg);
    EvalResult res;
    res.trials = trials.size();
    res.per_cell.resize(grid.size());
    for (std::size_t c = 0; c < grid.size(); ++c)
        res.per_cell[c].cell = grid[c];

    std::vector<double> err_sum(grid.size(), 0.0);
    std::size_t detected = 0;
    std::size_t total = 0;
    for (const auto& trial : trials)
        for (const auto& s : trial) {
            CellStat& c = res.per_cell.at(s.cell);
            ++c.n_visits;
            ++total;
            if (s.detected) {
                ++c.n_obs;
                ++detected;
                err_sum[s.cell] += circular_error_deg(s.true_bearing_deg, s.est_bearing_deg);
            }
        }
    for (std::size_t c = 0; c < grid.size(); ++c)
        if (res.per_cell[c].n_obs > 0)
            res.per_cell[c].mae_deg = err_sum[c] / static_cast<double>(res.per_cell[c].n_obs);
    res.detection_rate = total == 0 ? 0.0 : static_cast<double>(detected) / static_cast<double>(total);

    const double eta = config.eta();
    for (double mu : config.eval.mu) {
        std::vector<double> per_trial;
        for (const auto& trial : trials)
            if (auto v = wmae(trial, mu, eta))
                per_trial.push_back(*v);

        WmaeStat w;
        w.mu = mu;
        w.n_trials = per_trial.size();
        if (!per_trial.empty()) {
            double mean = 0.0;
            for (double v : per_trial)
                mean += v;
            mean /= static_cast<double>(per_trial.size());
            w.value = mean;
            if (per_trial.size() > 1) {
                double ss = 0.0;
                for (double v : per_trial)
                    ss += (v - mean) * (v - mean);
                const double sd = std::sqrt(ss / static_cast<double>(per_trial.size() - 1));
                w.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(per_trial.size()));
            }
        }
        res.wmae_by_mu.push_back(w);
    }
    return res;
}

EvalResult run_grid_eval(const ExperimentConfig& config, std::size_t n_trials, std::uint64_t master_seed)
{
    config.validate();
    if (n_trials == 0)
        throw std::invalid_argument("run_grid_eval: need at least one trial");

    std::vector<std::vector<ErrorSample>> trials(n_trials);
    std::size_t n_threads = config.eval.threads != 0 ? config.eval.threads
                                                     : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min(n_threads, n_trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n_trials; i = next++) {
            try {
                trials[i] = run_grid_trial(config, derive_seed(master_seed, i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return aggregate_trials(config, trials);
}

SweepAxis parse_sweep_axis(const std::string& name)
{
    if (name == "psl")
        return SweepAxis::psl;
    if (name == "beamwidth")
        return SweepAxis::beamwidth;
    if (name == "blocker_radius")
        return SweepAxis::blocker_radius;
    throw std::invalid_argument("unknown sweep axis: " + name);
}

std::string to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::psl:
        return "psl";
    case SweepAxis::beamwidth:
        return "beamwidth";
    case SweepAxis::blocker_radius:
        return "blocker_radius";
    }
    return "?";
}

ExperimentConfig apply_axis(const ExperimentConfig& config, SweepAxis axis, double value)
{
    ExperimentConfig c = config;
    switch (axis) {
    case SweepAxis::psl:
        if (!(value >= 0.0) || !std::isfinite(value))
            throw std::invalid_argument("sweep: PSL must be finite and >= 0 dB");
        c.set_rx_psl_db(value);
        break;
    case SweepAxis::beamwidth: {
        const double n = 360.0 / value;
        if (!(value > 0.0 && value < 360.0) || std::abs(n - std::round(n)) > 1e-9)
            throw std::invalid_argument("sweep: beamwidth must divide 360 degrees");
        c.set_rx_beamwidth(value);
        break;
    }
    case SweepAxis::blocker_radius:
        if (!(value > 0.0) || !std::isfinite(value))
            throw std::invalid_argument("sweep: blocker radius must be positive");
        c.set_blocker_radius(value);
        break;
    }
    c.validate();
    return c;
}

std::vector<std::pair<double, EvalResult>> sweep(const ExperimentConfig& config, SweepAxis axis,
                                                 const std::vector<double>& values, std::size_t n_trials,
                                                 std::uint64_t master_seed)
{
    if (values.empty())
        throw std::invalid_argument("sweep: no axis values");
    std::vector<ExperimentConfig> configs;
    for (double v : values)
        configs.push_back(apply_axis(config, axis, v));

    std::vector<std::pair<double, EvalResult>> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out.emplace_back(values[i], run_grid_eval(configs[i], n_trials, master_seed));
    return out;
}

void write_cells_csv(std::ostream& os, const EvalResult& result)
{
    os.precision(12);
    os << "ring_lo_m,psi_lo_deg,mae_deg,n_obs\n";
    for (const auto& c : result.per_cell) {
        os << c.cell.d_lo_m << ',' << c.cell.psi_lo_deg << ',';
        if (c.mae_deg)
            os << *c.mae_deg;
        os << ',' << c.n_obs << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<std::pair<double, EvalResult>>& results)
{
    os.precision(12);
    os << "axis_value,mu,wmae_deg,ci95_deg,detection_rate\n";
    for (const auto& [value, res] : results)
        for (const auto& w : res.wmae_by_mu) {
            os << value << ',' << w.mu << ',';
            if (w.value)
                os << *w.value;
            os << ',' << w.ci95 << ',' << res.detection_rate << '\n';
        }
}

} // namespace sidelobe
