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
#include "sidelobe/evaluation.hpp"
#include "sidelobe/mobility.hpp"
#include "sidelobe/signature.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sidelobe {

struct Rgb
{
    int r = 0;
    int g = 0;
    int b = 0;
};

/// Linear map from [lo, hi] onto a fixed colour ramp; values outside clamp.
struct ColorScale
{
    double lo = 0.0;
    double hi = 1.0;

    Rgb at(double value) const;
    static ColorScale fit(const std::vector<double>& values);
};

std::string to_hex(Rgb c);

/// SVG path data for the annular sector between radii r0 < r1 (pixels)
/// and bearings a0 < a1 (degrees, counter-clockwise from +x), centred at (cx, cy).
std::string annular_sector_path(double cx, double cy, double r0, double r1, double a0_deg, double a1_deg);

/// Polar heatmap of per-cell MAE. Cells without observations are hatched grey.
void write_polar_heatmap_svg(std::ostream& os, const std::vector<CellStat>& cells, const std::string& title);

/// Row/column heatmap of a matrix, row 0 at the top.
void write_matrix_heatmap_svg(std::ostream& os, const Eigen::MatrixXd& values, const std::string& title,
                              const std::string& row_label, const std::string& col_label);

/// Network scatter with the blocker path (positions relative to the reference BS).
void write_deployment_svg(std::ostream& os, const Deployment& deployment,
                          const std::vector<BlockerState>& trajectory, double link_boresight_deg);

/// Bearing against epoch: ground truth as a line, estimates as markers.
void write_trajectory_svg(std::ostream& os, const std::vector<BlockerState>& trajectory,
                          const std::vector<AngularEstimate>& estimates);

/// wMAE curves against a swept axis, one polyline per mu.
void write_sweep_svg(std::ostream& os, const std::vector<std::pair<double, EvalResult>>& results,
                     const std::string& axis_label, const std::string& title);

} // namespace sidelobe
