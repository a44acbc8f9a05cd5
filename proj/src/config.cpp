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

#include "sidelobe/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace sidelobe {

using nlohmann::json;

AntennaPattern ExperimentConfig::rx_pattern() const
{
    AntennaPattern p = default_rx_pattern(antenna_rx.beamwidth_deg);
    if (antenna_rx.main_gain)
        p.main_gain = *antenna_rx.main_gain;
    if (antenna_rx.side_gain)
        p.side_gain = *antenna_rx.side_gain;
    return p;
}

AntennaPattern ExperimentConfig::tx_pattern() const
{
    AntennaPattern p = default_tx_pattern(antenna_tx.beamwidth_deg);
    if (antenna_tx.main_gain)
        p.main_gain = *antenna_tx.main_gain;
    if (antenna_tx.side_gain)
        p.side_gain = *antenna_tx.side_gain;
    return p;
}

void ExperimentConfig::set_blocker_radius(double r_b_m)
{
    blocker.r_b_m = r_b_m;
    channel.blockage_sigma_deg = blockage_sigma_for_radius(r_b_m);
}

void ExperimentConfig::set_rx_beamwidth(double beamwidth_deg)
{
    antenna_rx = AntennaSpec{beamwidth_deg, std::nullopt, std::nullopt};
    sensing.n_sectors = static_cast<std::size_t>(std::llround(360.0 / beamwidth_deg));
}

void ExperimentConfig::set_rx_psl_db(double psl_db)
{
    const double main = rx_pattern().main_gain;
    antenna_rx.main_gain = main;
    antenna_rx.side_gain = main / db_to_linear(psl_db);
}

namespace {

// Component validators report "<key> must ..."; lift the key into ConfigError.
template <typename F>
void rethrow_keyed(F&& f)
{
    try {
        f();
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        const auto space = msg.find(' ');
        throw ConfigError(msg.substr(0, space), space == std::string::npos ? msg : msg.substr(space + 1));
    }
}

void check(bool ok, const std::string& key, const std::string& what)
{
    if (!ok)
        throw ConfigError(key, what);
}

void validate_antenna(const AntennaSpec& spec, const AntennaPattern& resolved, const std::string& prefix)
{
    check(spec.beamwidth_deg > 0.0 && spec.beamwidth_deg < 360.0, prefix + ".beamwidth_deg",
          "must be in (0, 360)");
    check(resolved.main_gain > 0.0 && std::isfinite(resolved.main_gain), prefix + ".main_gain",
          "must be positive");
    check(resolved.side_gain >= 0.0 && std::isfinite(resolved.side_gain), prefix + ".side_gain",
          "must be non-negative");
    check(resolved.main_gain >= resolved.side_gain, prefix + ".side_gain", "must not exceed main_gain");
}

bool divides_circle(double deg)
{
    if (!(deg > 0.0))
        return false;
    const double n = 360.0 / deg;
    return std::abs(n - std::round(n)) < 1e-9;
}

} // namespace

void ExperimentConfig::validate() const
{
    rethrow_keyed([&] { network.validate(); });
    rethrow_keyed([&] { channel.validate(); });
    validate_antenna(antenna_rx, rx_pattern(), "antenna_rx");
    validate_antenna(antenna_tx, tx_pattern(), "antenna_tx");

    check(sensing.n_sectors >= 1, "sensing.n_sectors", "must be at least 1");
    if (bands.fixed) {
        check(bands.fixed->first >= 1, "bands", "l0 must be >= 1");
        check(bands.fixed->first <= bands.fixed->second, "bands", "l0 must not exceed l1");
    }
    check(detector.threshold_c >= 0.0 && std::isfinite(detector.threshold_c), "detector.threshold_c",
          "must be non-negative");

    check(blocker.r_b_m > 0.0 && std::isfinite(blocker.r_b_m), "blocker.r_b_m", "must be positive");
    check(blocker.dt_s > 0.0 && std::isfinite(blocker.dt_s), "blocker.dt_s", "must be positive");
    check(blocker.demo_epochs >= sensing.tau + 1, "blocker.demo_epochs", "must be at least sensing.tau + 1");
    rethrow_keyed([&] { blocker.motion.validate(); });

    check(eval.n_trials >= 1, "eval.n_trials", "must be at least 1");
    check(!eval.mu.empty(), "eval.mu", "must not be empty");
    for (double mu : eval.mu)
        check(mu >= 0.0 && std::isfinite(mu), "eval.mu", "values must be non-negative");
    if (eval.eta)
        check(*eval.eta > 0.0 && std::isfinite(*eval.eta), "eval.eta", "must be positive");
    check(eval.ring_width_m > 0.0 && eval.max_radius_m >= eval.ring_width_m, "eval.ring_width_m",
          "must satisfy 0 < ring_width_m <= max_radius_m");
    check(divides_circle(eval.cell_angle_deg), "eval.cell_angle_deg", "must divide 360");
    check(eval.dwell_epochs >= 1, "eval.dwell_epochs", "must be at least 1");
    for (double p : eval.psl_db)
        check(p >= 0.0 && std::isfinite(p), "eval.psl_db", "values must be finite and >= 0");
    for (double bw : eval.beamwidths_deg)
        check(divides_circle(bw) && bw < 360.0, "eval.beamwidths_deg", "values must divide 360");
    for (double r : eval.blocker_radii_m)
        check(r > 0.0 && std::isfinite(r), "eval.blocker_radii_m", "values must be positive");
}

namespace {

/// Reads one JSON object, tracking which keys were consumed.
class ObjectReader
{
public:
    ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }

    const json* find(const std::string& k)
    {
        auto it = node_.find(k);
        if (it == node_.end())
            return nullptr;
        seen_.insert(k);
        return &*it;
    }

    void number(const std::string& k, double& out)
    {
        if (const json* v = find(k)) {
            if (v->is_string() && v->get<std::string>() == "inf") {
                out = std::numeric_limits<double>::infinity();
                return;
            }
            if (!v->is_number())
                throw ConfigError(key(k), "expected a number");
            out = v->get<double>();
        }
    }

    void number(const std::string& k, std::optional<double>& out)
    {
        if (const json* v = find(k)) {
            if (v->is_null()) {
                out.reset();
                return;
            }
            if (!v->is_number())
                throw ConfigError(key(k), "expected a number or null");
            out = v->get<double>();
        }
    }

    template <typename Int>
    void integer(const std::string& k, Int& out)
    {
        if (const json* v = find(k)) {
            if (!v->is_number_integer() || (v->is_number_integer() && !v->is_number_unsigned() && v->get<long long>() < 0))
                throw ConfigError(key(k), "expected a non-negative integer");
            out = v->get<Int>();
        }
    }

    void numbers(const std::string& k, std::vector<double>& out)
    {
        if (const json* v = find(k)) {
            if (!v->is_array())
                throw ConfigError(key(k), "expected an array of numbers");
            out.clear();
            for (const json& e : *v) {
                if (!e.is_number())
                    throw ConfigError(key(k), "expected an array of numbers");
                out.push_back(e.get<double>());
            }
        }
    }

    std::optional<ObjectReader> child(const std::string& k)
    {
        if (const json* v = find(k))
            return ObjectReader(*v, key(k));
        return std::nullopt;
    }

    void finish() const
    {
        for (auto it = node_.begin(); it != node_.end(); ++it)
            if (!seen_.contains(it.key()))
                throw ConfigError(key(it.key()), "unknown key");
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_antenna(ObjectReader& parent, const std::string& k, AntennaSpec& spec)
{
    if (auto r = parent.child(k)) {
        r->number("beamwidth_deg", spec.beamwidth_deg);
        r->number("main_gain", spec.main_gain);
        r->number("side_gain", spec.side_gain);
        r->finish();
    }
}

json number_or_inf(double v)
{
    if (std::isinf(v) && v > 0.0)
        return "inf";
    return v;
}

json antenna_json(const AntennaSpec& spec)
{
    json j{{"beamwidth_deg", spec.beamwidth_deg}};
    if (spec.main_gain)
        j["main_gain"] = *spec.main_gain;
    if (spec.side_gain)
        j["side_gain"] = *spec.side_gain;
    return j;
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }

    ExperimentConfig cfg;
    ObjectReader top(root, "");
    top.integer("seed", cfg.seed);

    if (auto r = top.child("network")) {
        r->number("radius_m", cfg.network.radius_m);
        r->number("bs_density", cfg.network.bs_density);
        r->number("ue_density", cfg.network.ue_density);
        r->finish();
    }
    if (auto r = top.child("channel")) {
        ChannelParams& c = cfg.channel;
        r->number("pl0_db", c.pl0_db);
        r->number("pl_exponent", c.pl_exponent);
        r->number("ref_distance_m", c.ref_distance_m);
        r->number("shadow_sigma_db", c.shadow_sigma_db);
        r->number("nakagami_m", c.nakagami_m);
        r->number("blockage_a_db", c.blockage_a_db);
        r->number("tx_power_dbm", c.tx_power_dbm);
        r->number("noise_psd_dbm_hz", c.noise_psd_dbm_hz);
        r->number("bandwidth_hz", c.bandwidth_hz);
        r->finish();
    }
    read_antenna(top, "antenna_rx", cfg.antenna_rx);
    read_antenna(top, "antenna_tx", cfg.antenna_tx);
    if (auto r = top.child("sensing")) {
        r->integer("tau", cfg.sensing.tau);
        r->integer("n_sectors", cfg.sensing.n_sectors);
        r->finish();
    }
    if (const json* b = top.find("bands")) {
        if (b->is_string() && b->get<std::string>() == "auto") {
            cfg.bands.fixed.reset();
        } else if (b->is_array() && b->size() == 2 && (*b)[0].is_number_unsigned()
                   && (*b)[1].is_number_unsigned()) {
            cfg.bands.fixed = std::pair{(*b)[0].get<std::size_t>(), (*b)[1].get<std::size_t>()};
        } else {
            throw ConfigError("bands", "expected [l0, l1] or \"auto\"");
        }
    }
    if (auto r = top.child("detector")) {
        r->number("threshold_c", cfg.detector.threshold_c);
        if (const json* m = r->find("strength")) {
            const std::string mode = m->is_string() ? m->get<std::string>() : "";
            if (mode == "rise")
                cfg.detector.strength = StrengthMode::rise;
            else if (mode == "magnitude")
                cfg.detector.strength = StrengthMode::magnitude;
            else
                throw ConfigError("detector.strength", "expected \"rise\" or \"magnitude\"");
        }
        r->finish();
    }
    if (auto r = top.child("blocker")) {
        r->number("r_b_m", cfg.blocker.r_b_m);
        r->number("dt_s", cfg.blocker.dt_s);
        r->integer("demo_epochs", cfg.blocker.demo_epochs);
        if (auto m = r->child("motion")) {
            RandomMotionLaw& law = cfg.blocker.motion;
            m->number("max_angular_velocity_deg_s", law.max_angular_velocity_deg_s);
            m->number("max_radial_velocity_m_s", law.max_radial_velocity_m_s);
            m->number("hold_s", law.hold_s);
            m->number("d_min_m", law.d_min_m);
            m->number("d_max_m", law.d_max_m);
            m->finish();
        }
        r->finish();
    }
    if (auto r = top.child("eval")) {
        EvalSpec& e = cfg.eval;
        r->integer("n_trials", e.n_trials);
        r->numbers("mu", e.mu);
        r->number("eta", e.eta);
        r->number("max_radius_m", e.max_radius_m);
        r->number("ring_width_m", e.ring_width_m);
        r->number("cell_angle_deg", e.cell_angle_deg);
        r->integer("dwell_epochs", e.dwell_epochs);
        r->integer("threads", e.threads);
        r->numbers("psl_db", e.psl_db);
        r->numbers("beamwidths_deg", e.beamwidths_deg);
        r->numbers("blocker_radii_m", e.blocker_radii_m);
        r->finish();
    }
    top.finish();

    cfg.network.seed = cfg.seed;
    check(cfg.blocker.r_b_m > 0.0 && std::isfinite(cfg.blocker.r_b_m), "blocker.r_b_m", "must be positive");
    cfg.set_blocker_radius(cfg.blocker.r_b_m);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("<file>", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ExperimentConfig& cfg)
{
    const ChannelParams& c = cfg.channel;
    json j;
    j["seed"] = cfg.seed;
    j["network"] = {{"radius_m", cfg.network.radius_m},
                    {"bs_density", cfg.network.bs_density},
                    {"ue_density", cfg.network.ue_density}};
    j["channel"] = {{"pl0_db", c.pl0_db},
                    {"pl_exponent", c.pl_exponent},
                    {"ref_distance_m", c.ref_distance_m},
                    {"shadow_sigma_db", c.shadow_sigma_db},
                    {"nakagami_m", number_or_inf(c.nakagami_m)},
                    {"blockage_a_db", c.blockage_a_db},
                    {"tx_power_dbm", c.tx_power_dbm},
                    {"noise_psd_dbm_hz", c.noise_psd_dbm_hz},
                    {"bandwidth_hz", c.bandwidth_hz}};
    j["antenna_rx"] = antenna_json(cfg.antenna_rx);
    j["antenna_tx"] = antenna_json(cfg.antenna_tx);
    j["sensing"] = {{"tau", cfg.sensing.tau}, {"n_sectors", cfg.sensing.n_sectors}};
    if (cfg.bands.fixed)
        j["bands"] = {cfg.bands.fixed->first, cfg.bands.fixed->second};
    else
        j["bands"] = "auto";
    j["detector"] = {{"threshold_c", cfg.detector.threshold_c},
                     {"strength", cfg.detector.strength == StrengthMode::rise ? "rise" : "magnitude"}};
    const RandomMotionLaw& law = cfg.blocker.motion;
    j["blocker"] = {{"r_b_m", cfg.blocker.r_b_m},
                    {"dt_s", cfg.blocker.dt_s},
                    {"demo_epochs", cfg.blocker.demo_epochs},
                    {"motion",
                     {{"max_angular_velocity_deg_s", law.max_angular_velocity_deg_s},
                      {"max_radial_velocity_m_s", law.max_radial_velocity_m_s},
                      {"hold_s", law.hold_s},
                      {"d_min_m", law.d_min_m},
                      {"d_max_m", law.d_max_m}}}};
    const EvalSpec& e = cfg.eval;
    j["eval"] = {{"n_trials", e.n_trials},
                 {"mu", e.mu},
                 {"max_radius_m", e.max_radius_m},
                 {"ring_width_m", e.ring_width_m},
                 {"cell_angle_deg", e.cell_angle_deg},
                 {"dwell_epochs", e.dwell_epochs},
                 {"threads", e.threads},
                 {"psl_db", e.psl_db},
                 {"beamwidths_deg", e.beamwidths_deg},
                 {"blocker_radii_m", e.blocker_radii_m}};
    if (e.eta)
        j["eval"]["eta"] = *e.eta;
    return j.dump(2);
}

void save_config(const ExperimentConfig& config, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ConfigError("<file>", "cannot write " + path);
    out << dump_config(config) << '\n';
}

} // namespace sidelobe
