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

#include "sidelobe/sensing.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sidelobe {

/// Thin SVD truncated to the numerical rank r: columns 0..r-1 of u and v
/// pair with singular_values(0..r-1), all strictly positive and sorted.
struct SvdFactors
{
    Eigen::MatrixXd u;               // rows x r
    Eigen::VectorXd singular_values; // r
    Eigen::MatrixXd v;               // cols x r
    std::size_t rank = 0;
    Eigen::VectorXd spectrum;        // all min(rows, cols) singular values, zeros included
};

/// Throws std::domain_error on non-finite input.
SvdFactors svd(const Eigen::MatrixXd& matrix);

/// Sum of sigma_l u_l v_l^T over 1-based l in [first, last]; zero when first > last.
Eigen::MatrixXd partial_reconstruction(const SvdFactors& factors, std::size_t first, std::size_t last);

/// Three-band split: trend (1..l0), signature (l0+1..l1), noise (l1+1..r).
struct BandSplit
{
    std::size_t l0 = 1;
    std::size_t l1 = 1;
    Eigen::MatrixXd trend;
    Eigen::MatrixXd signature;
    Eigen::MatrixXd noise;
};

/// Requires 1 <= l0 <= l1 <= rank; throws std::invalid_argument otherwise.
BandSplit split_bands(const SvdFactors& factors, std::size_t l0, std::size_t l1);

/// Picks (l0, l1) at the two sharpest bends of the relative singular value
/// curve sigma_l / sigma_1.
///
/// The bend at vertex v is the change of linear slope between (v-1, v) and
/// (v, v+1); a bend counts only if the log10 curve bends there by more
/// than \p min_log_bend decades, so a purely geometric decay has no bends.
/// The two largest qualifying bends at vertices v_a < v_b give
/// (l0, l1) = (v_a - 1, v_b - 1), i.e. the band edges sit just before the
/// bend. With fewer than two qualifying bends the result is (1, ceil(r/2)).
/// Throws std::invalid_argument for fewer than three values.
std::pair<std::size_t, std::size_t> suggest_bands(std::span<const double> singular_values,
                                                  double min_log_bend = 0.1);

/// How a signature entry is turned into a per-sector strength.
///   rise:      the signed band value; blocking an interferer can only raise
///              its sector SINR, so only positive excursions count.
///   magnitude: |band value|, either direction counts.
enum class StrengthMode { rise, magnitude };

struct DetectorConfig
{
    double threshold_c = 20.0; // MAD multiplier
    StrengthMode strength = StrengthMode::rise;

    bool operator==(const DetectorConfig&) const = default;
};

struct AngularEstimate
{
    std::size_t epoch = 0;
    std::optional<std::size_t> sector;
    std::optional<double> bearing_deg;
    double strength = 0.0; // largest strength in the row
};

/// median(|S|) + c * MAD(|S|) over every entry of the signature band.
double detection_threshold(const Eigen::MatrixXd& signature, const DetectorConfig& config);

/// One estimate per matrix row. A row reports the sector with the largest
/// strength when that value exceeds detection_threshold().
double signature_strength(double band_value, StrengthMode mode);

std::vector<AngularEstimate> estimate_angles(const BandSplit& split, const SectorPartition& partition,
                                             std::span<const std::size_t> epoch_of_row,
                                             const DetectorConfig& config);

/// Fixed band indices, or automatic selection when absent.
struct BandChoice
{
    std::optional<std::pair<std::size_t, std::size_t>> fixed = std::pair<std::size_t, std::size_t>{1, 17};

    bool operator==(const BandChoice&) const = default;
};

struct SignatureResult
{
    SvdFactors factors;
    BandSplit split;
    std::vector<AngularEstimate> estimates;
    double threshold = 0.0;
};

/// svd -> band split -> per-epoch estimates. Fixed bands larger than the
/// matrix rank are clamped to it.
SignatureResult extract_signature(const SensingMatrix& matrix, const BandChoice& bands,
                                  const DetectorConfig& detector);

/// CSV columns: epoch,sector,strength,detected. strength follows the detector mode.
void write_signature_csv(std::ostream& os, const SensingMatrix& matrix, const SignatureResult& result,
                         StrengthMode mode = StrengthMode::rise);

/// CSV columns: epoch,bearing_deg (empty when nothing was detected).
void write_estimates_csv(std::ostream& os, const std::vector<AngularEstimate>& estimates);

} // namespace sidelobe
