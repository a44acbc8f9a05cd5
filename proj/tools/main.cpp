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

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using Command = std::function<std::vector<std::filesystem::path>(const sidelobe::ExperimentConfig&,
                                                                 const std::filesystem::path&)>;

struct Args
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string out_dir = "out";
};

int run(const std::string& name, const Command& command, const Args& args)
{
    sidelobe::ExperimentConfig cfg =
        args.config_path.empty() ? sidelobe::ExperimentConfig{} : sidelobe::load_config(args.config_path);
    cfg = sidelobe::resolve_config(cfg, {args.seed, args.trials});

    std::cout << "seed " << cfg.seed << '\n';
    if (name != "demo")
        std::cout << "trials " << cfg.eval.n_trials << '\n';
    std::cout.flush();

    const auto start = std::chrono::steady_clock::now();
    const auto files = command(cfg, args.out_dir);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    for (const auto& f : files)
        std::cout << "wrote " << f.string() << '\n';
    std::cout << name << " finished in " << elapsed.count() << " s\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Side-lobe interference sensing of moving mmWave blockers"};
    app.require_subcommand(1);

    const std::map<std::string, std::pair<std::string, Command>> commands{
        {"demo", {"single deployment, random blocker walk, one sensing window", sidelobe::cmd_demo}},
        {"grid", {"Monte Carlo over the polar mesh grid, per-cell MAE and wMAE", sidelobe::cmd_grid}},
        {"sweep-psl", {"grid evaluation across peak side-lobe gains", sidelobe::cmd_sweep_psl}},
        {"sweep-bw-size", {"grid evaluation across beamwidths and blocker radii", sidelobe::cmd_sweep_bw_size}},
    };

    Args args;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--config", args.config_path, "JSON experiment config")->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "master seed (overrides the config)");
        sub->add_option("--out", args.out_dir, "output directory")->capture_default_str();
        sub->add_option("--trials", trials, "Monte Carlo trials (overrides the config)")
            ->check(CLI::PositiveNumber);
        subs[name] = sub;
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed())
                continue;
            if (sub->count("--seed") > 0)
                args.seed = seed;
            if (sub->count("--trials") > 0)
                args.trials = trials;
            return run(name, commands.at(name).second, args);
        }
    } catch (const sidelobe::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
