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
#include "sidelobe/config.hpp"
#include "sidelobe/evaluation.hpp"
#include "sidelobe/radio.hpp"
#include "sidelobe/sensing.hpp"
#include "sidelobe/signature.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace py = pybind11;
using namespace sidelobe;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Eigen::MatrixXd points(const std::vector<Point>& pts)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(pts.size()), 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) << pts[i].x, pts[i].y;
    return out;
}

py::list estimates_list(const std::vector<AngularEstimate>& estimates)
{
    py::list out;
    for (const auto& e : estimates) {
        py::dict d;
        d["epoch"] = e.epoch;
        d["sector"] = e.sector;
        d["bearing_deg"] = e.bearing_deg;
        d["strength"] = e.strength;
        out.append(d);
    }
    return out;
}

py::dict result_dict(const EvalResult& res)
{
    Eigen::MatrixXd cells(static_cast<Eigen::Index>(res.per_cell.size()), 7);
    for (std::size_t i = 0; i < res.per_cell.size(); ++i) {
        const CellStat& c = res.per_cell[i];
        cells.row(static_cast<Eigen::Index>(i)) << c.cell.d_lo_m, c.cell.d_hi_m, c.cell.psi_lo_deg,
            c.cell.psi_hi_deg, c.mae_deg.value_or(kNaN), static_cast<double>(c.n_obs),
            static_cast<double>(c.n_visits);
    }
    py::dict wmae;
    for (const auto& w : res.wmae_by_mu)
        wmae[py::float_(w.mu)] = py::make_tuple(w.value.value_or(kNaN), w.ci95, w.n_trials);

    py::dict d;
    d["cells"] = cells; // d_lo, d_hi, psi_lo, psi_hi, mae (nan when unobserved), n_obs, n_visits
    d["wmae"] = wmae;   // mu -> (value, ci95, n_trials)
    d["detection_rate"] = res.detection_rate;
    d["trials"] = res.trials;
    d["inner_mae"] = res.ring_band_mae(0.0, 25.0).value_or(kNaN);
    d["outer_mae"] = res.ring_band_mae(25.0, 50.0).value_or(kNaN);
    return d;
}

StrengthMode parse_mode(const std::string& s)
{
    if (s == "rise")
        return StrengthMode::rise;
    if (s == "magnitude")
        return StrengthMode::magnitude;
    throw std::invalid_argument("strength must be 'rise' or 'magnitude'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Side-lobe interference sensing of moving mmWave blockers";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<AntennaPattern>(m, "AntennaPattern")
        .def(py::init<>())
        .def_readwrite("beamwidth_deg", &AntennaPattern::beamwidth_deg)
        .def_readwrite("main_gain", &AntennaPattern::main_gain)
        .def_readwrite("side_gain", &AntennaPattern::side_gain)
        .def_readwrite("boresight_deg", &AntennaPattern::boresight_deg)
        .def("psl_db", [](const AntennaPattern& p) { return linear_to_db(psl(p)); })
        .def_static("default_rx", &default_rx_pattern, py::arg("beamwidth_deg") = 10.0)
        .def_static("default_tx", &default_tx_pattern, py::arg("beamwidth_deg") = 135.0);

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def_readwrite("pl0_db", &ChannelParams::pl0_db)
        .def_readwrite("pl_exponent", &ChannelParams::pl_exponent)
        .def_readwrite("nakagami_m", &ChannelParams::nakagami_m)
        .def_readwrite("blockage_a_db", &ChannelParams::blockage_a_db)
        .def_readwrite("blockage_sigma_deg", &ChannelParams::blockage_sigma_deg)
        .def_readwrite("tx_power_dbm", &ChannelParams::tx_power_dbm)
        .def_readwrite("bandwidth_hz", &ChannelParams::bandwidth_hz)
        .def("noise_power_dbm", &ChannelParams::noise_power_dbm);

    py::class_<ExperimentConfig>(m, "Config")
        .def(py::init([](const std::string& text) { return parse_config(text); }), py::arg("json") = "{}")
        .def_static("from_file", &load_config)
        .def("to_json", &dump_config)
        .def("save", &save_config)
        .def("validate", &ExperimentConfig::validate)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("channel", &ExperimentConfig::channel)
        .def_property(
            "n_trials", [](const ExperimentConfig& c) { return c.eval.n_trials; },
            [](ExperimentConfig& c, std::size_t n) { c.eval.n_trials = n; })
        .def_property(
            "threads", [](const ExperimentConfig& c) { return c.eval.threads; },
            [](ExperimentConfig& c, std::size_t n) { c.eval.threads = n; })
        .def_property(
            "bands", [](const ExperimentConfig& c) { return c.bands.fixed; },
            [](ExperimentConfig& c, std::optional<std::pair<std::size_t, std::size_t>> b) { c.bands.fixed = b; })
        .def_property(
            "threshold_c", [](const ExperimentConfig& c) { return c.detector.threshold_c; },
            [](ExperimentConfig& c, double v) { c.detector.threshold_c = v; })
        .def("rx_pattern", &ExperimentConfig::rx_pattern)
        .def("tx_pattern", &ExperimentConfig::tx_pattern)
        .def("set_rx_psl_db", &ExperimentConfig::set_rx_psl_db)
        .def("set_rx_beamwidth", &ExperimentConfig::set_rx_beamwidth)
        .def("set_blocker_radius", &ExperimentConfig::set_blocker_radius)
        .def("__eq__", [](const ExperimentConfig& a, const ExperimentConfig& b) { return a == b; });

    m.def("reference_gain", &reference_gain, py::arg("beamwidth_deg"));
    m.def("antenna_gain", &antenna_gain, py::arg("pattern"), py::arg("offset_deg"));
    m.def("pathloss_db", &pathloss_db, py::arg("params"), py::arg("distance_m"));
    m.def("blockage_db", &blockage_db, py::arg("angle_sep_deg"), py::arg("params"));
    m.def("blockage_sigma_for_radius", &blockage_sigma_for_radius, py::arg("blocker_radius_m"));
    m.def("interferer_presence_prob", &interferer_presence_prob, py::arg("ue_density"),
          py::arg("half_width_rad"), py::arg("radius_m"));
    m.def(
        "sector_of",
        [](std::size_t n, double reference_deg, double aoa_deg) {
            return sector_of(SectorPartition::uniform(n, reference_deg), aoa_deg);
        },
        py::arg("n_sectors"), py::arg("reference_deg"), py::arg("aoa_deg"));

    m.def(
        "build_deployment",
        [](const ExperimentConfig& cfg, std::uint64_t seed) {
            Rng rng(seed);
            NetworkConfig net = cfg.network;
            net.seed = seed;
            const Deployment dep = build_deployment(net, rng);
            py::dict d;
            d["bs"] = points(dep.bs_positions);
            d["ue"] = points(dep.ue_positions);
            d["association"] = dep.association;
            d["typical_bs"] = dep.typical_bs;
            d["typical_ue"] = dep.typical_ue;
            return d;
        },
        py::arg("config"), py::arg("seed"));

    m.def(
        "svd",
        [](const Eigen::MatrixXd& a) {
            const SvdFactors f = svd(a);
            return py::make_tuple(f.u, f.singular_values, f.v, f.rank);
        },
        py::arg("matrix"), "Thin SVD truncated to numerical rank: (U, s, V, rank).");
    m.def(
        "split_bands",
        [](const Eigen::MatrixXd& a, std::size_t l0, std::size_t l1) {
            const BandSplit b = split_bands(svd(a), l0, l1);
            return py::make_tuple(b.trend, b.signature, b.noise);
        },
        py::arg("matrix"), py::arg("l0"), py::arg("l1"));
    m.def(
        "suggest_bands",
        [](const std::vector<double>& sv, double min_log_bend) {
            return suggest_bands(std::span<const double>(sv), min_log_bend);
        },
        py::arg("singular_values"), py::arg("min_log_bend") = 0.1);
    m.def(
        "detection_threshold",
        [](const Eigen::MatrixXd& s, double c) { return detection_threshold(s, DetectorConfig{c}); },
        py::arg("signature"), py::arg("threshold_c") = DetectorConfig{}.threshold_c);
    m.def(
        "extract_signature",
        [](const Eigen::MatrixXd& a, std::optional<std::pair<std::size_t, std::size_t>> bands, double c,
           const std::string& strength, double reference_deg) {
            SensingMatrix mat;
            mat.values_db = a;
            mat.partition = SectorPartition::uniform(static_cast<std::size_t>(a.cols()), reference_deg);
            for (Eigen::Index r = 0; r < a.rows(); ++r)
                mat.epoch_of_row.push_back(static_cast<std::size_t>(a.rows() - 1 - r));
            const SignatureResult res = extract_signature(mat, BandChoice{bands}, DetectorConfig{c, parse_mode(strength)});
            py::dict d;
            d["signature"] = res.split.signature;
            d["bands"] = py::make_tuple(res.split.l0, res.split.l1);
            d["threshold"] = res.threshold;
            d["estimates"] = estimates_list(res.estimates);
            return d;
        },
        py::arg("matrix"), py::arg("bands") = std::optional<std::pair<std::size_t, std::size_t>>(std::pair{1, 17}),
        py::arg("threshold_c") = DetectorConfig{}.threshold_c, py::arg("strength") = "rise",
        py::arg("reference_deg") = 0.0,
        "Rows are epochs with the newest first; bands=None picks them from the spectrum.");

    m.def("circular_error_deg", &circular_error_deg, py::arg("true_deg"), py::arg("est_deg"));
    m.def("weight", &weight, py::arg("distance_m"), py::arg("mu"), py::arg("eta"));
    m.def(
        "wmae",
        [](const std::vector<double>& truth, const std::vector<double>& est, const std::vector<double>& dist,
           const std::vector<bool>& detected, double mu, double eta) {
            const std::size_t n = truth.size();
            if (est.size() != n || dist.size() != n || detected.size() != n)
                throw std::invalid_argument("wmae: inputs must have equal length");
            std::vector<ErrorSample> samples(n);
            for (std::size_t i = 0; i < n; ++i)
                samples[i] = {truth[i], est[i], dist[i], detected[i], 0};
            return wmae(samples, mu, eta);
        },
        py::arg("true_deg"), py::arg("est_deg"), py::arg("distance_m"), py::arg("detected"), py::arg("mu"),
        py::arg("eta"));
    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"));

    m.def(
        "run_demo",
        [](const ExperimentConfig& cfg) {
            DemoRun run;
            {
                py::gil_scoped_release release;
                run = run_demo(cfg);
            }
            Eigen::MatrixXd traj(static_cast<Eigen::Index>(run.trajectory.size()), 2);
            for (std::size_t t = 0; t < run.trajectory.size(); ++t)
                traj.row(static_cast<Eigen::Index>(t)) << run.trajectory[t].distance_m, run.trajectory[t].bearing_deg;
            py::dict d;
            d["bs"] = points(run.deployment.bs_positions);
            d["ue"] = points(run.deployment.ue_positions);
            d["association"] = run.deployment.association;
            d["link_boresight_deg"] = run.link_boresight_deg;
            d["trajectory"] = traj; // d_m, bearing_deg per epoch
            d["matrix"] = run.matrix.values_db;
            d["epoch_of_row"] = run.matrix.epoch_of_row;
            d["signature"] = run.signature.split.signature;
            d["threshold"] = run.signature.threshold;
            d["estimates"] = estimates_list(run.signature.estimates);
            return d;
        },
        py::arg("config"));

    m.def(
        "run_grid_eval",
        [](const ExperimentConfig& cfg, std::optional<std::size_t> n_trials, std::optional<std::uint64_t> seed) {
            EvalResult res;
            {
                py::gil_scoped_release release;
                res = run_grid_eval(cfg, n_trials.value_or(cfg.eval.n_trials), seed.value_or(cfg.seed));
            }
            return result_dict(res);
        },
        py::arg("config"), py::arg("n_trials") = py::none(), py::arg("seed") = py::none());

    m.def(
        "sweep",
        [](const ExperimentConfig& cfg, const std::string& axis, const std::vector<double>& values,
           std::optional<std::size_t> n_trials, std::optional<std::uint64_t> seed) {
            std::vector<std::pair<double, EvalResult>> results;
            const SweepAxis ax = parse_sweep_axis(axis);
            {
                py::gil_scoped_release release;
                results = sweep(cfg, ax, values, n_trials.value_or(cfg.eval.n_trials), seed.value_or(cfg.seed));
            }
            py::list out;
            for (const auto& [v, res] : results)
                out.append(py::make_tuple(v, result_dict(res)));
            return out;
        },
        py::arg("config"), py::arg("axis"), py::arg("values"), py::arg("n_trials") = py::none(),
        py::arg("seed") = py::none());
}
