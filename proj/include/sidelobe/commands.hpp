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
#include "sidelobe/deployment.hpp"
#include "sidelobe/mobility.hpp"
#include "sidelobe/sensing.hpp"
#include "sidelobe/signature.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace sidelobe {

/// Command-line overrides applied on top of a loaded config.
struct RunOptions
{
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
};

/// Applies the overrides and re-validates.
ExperimentConfig resolve_config(ExperimentConfig config, const RunOptions& options);

/// Everything the demo scenario produces, before anything is written.
struct DemoRun
{
    Deployment deployment;
    double link_boresight_deg = 0.0;
    std::vector<BlockerState> trajectory; // one state per epoch
    SensingMatrix matrix;                 // window ending at the last epoch
    SignatureResult signature;
};

/// Random-walk blocker starting near the reference link, one sensing window.
DemoRun run_demo(const ExperimentConfig& config);

/// Each command writes into \p out_dir (created if missing) and returns the
/// files it wrote, in order.
std::vector<std::filesystem::path> cmd_demo(const ExperimentConfig& config, const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> cmd_grid(const ExperimentConfig& config, const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> cmd_sweep_psl(const ExperimentConfig& config,
                                                 const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> cmd_sweep_bw_size(const ExperimentConfig& config,
                                                     const std::filesystem::path& out_dir);

} // namespace sidelobe
