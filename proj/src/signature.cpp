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

#include "sidelobe/signature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace sidelobe {

SvdFactors svd(const Eigen::MatrixXd& matrix)
{
    if (!matrix.allFinite())
        throw std::domain_error("svd: matrix has non-finite entries");

    SvdFactors f;
    if (matrix.size() == 0)
        return f;

    Eigen::BDCSVD<Eigen::MatrixXd> dec(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    f.spectrum = dec.singularValues();

    const double tol = f.spectrum.size() > 0
                           ? static_cast<double>(std::max(matrix.rows(), matrix.cols()))
                                 * std::numeric_limits<double>::epsilon() * f.spectrum(0)
                           : 0.0;
    Eigen::Index r = 0;
    while (r < f.spectrum.size() && f.spectrum(r) > tol)
        ++r;

    f.rank = static_cast<std::size_t>(r);
    f.singular_values = f.spectrum.head(r);
    f.u = dec.matrixU().leftCols(r);
    f.v = dec.matrixV().leftCols(r);
    return f;
}

Eigen::MatrixXd partial_reconstruction(const SvdFactors& factors, std::size_t first, std::size_t last)
{
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(factors.u.rows(), factors.v.rows());
    if (first < 1 || first > last)
        return out;
    const auto begin = static_cast<Eigen::Index>(first - 1);
    const auto count = static_cast<Eigen::Index>(last - first + 1);
    out.noalias() = factors.u.middleCols(begin, count)
                    * factors.singular_values.segment(begin, count).asDiagonal()
                    * factors.v.middleCols(begin, count).transpose();
    return out;
}

BandSplit split_bands(const SvdFactors& factors, std::size_t l0, std::size_t l1)
{
    if (l0 < 1 || l0 > l1 || l1 > factors.rank)
        throw std::invalid_argument("split_bands: need 1 <= l0 <= l1 <= rank");

    BandSplit s;
    s.l0 = l0;
    s.l1 = l1;
    s.trend = partial_reconstruction(factors, 1, l0);
    s.signature = partial_reconstruction(factors, l0 + 1, l1);
    s.noise = partial_reconstruction(factors, l1 + 1, factors.rank);
    return s;
}

std::pair<std::size_t, std::size_t> suggest_bands(std::span<const double> singular_values,
                                                  double min_log_bend)
{
    const std::size_t r = singular_values.size();
    if (r < 3)
        throw std::invalid_argument("suggest_bands: need at least three singular values");
    const double top = singular_values[0];
    if (!(top > 0.0))
        throw std::invalid_argument("suggest_bands: leading singular value must be positive");

    std::vector<double> rel(r);
    std::vector<double> log_rel(r);
    for (std::size_t l = 0; l < r; ++l) {
        rel[l] = singular_values[l] / top;
        log_rel[l] = std::log10(std::max(rel[l], std::numeric_limits<double>::min()));
    }

    struct Bend
    {
        std::size_t vertex; // 1-based
        double magnitude;
    };
    std::vector<Bend> bends;
    for (std::size_t i = 1; i + 1 < r; ++i) {
        const double log_bend = log_rel[i + 1] - 2.0 * log_rel[i] + log_rel[i - 1];
        if (std::abs(log_bend) <= min_log_bend)
            continue;
        const double bend = (rel[i + 1] - rel[i]) - (rel[i] - rel[i - 1]);
        bends.push_back({i + 1, std::abs(bend)});
    }

    if (bends.size() < 2)
        return {1, (r + 1) / 2};

    std::stable_sort(bends.begin(), bends.end(),
                     [](const Bend& a, const Bend& b) { return a.magnitude > b.magnitude; });
    const std::size_t a = std::min(bends[0].vertex, bends[1].vertex);
    const std::size_t b = std::max(bends[0].vertex, bends[1].vertex);
    return {a - 1, b - 1};
}

namespace {

double median_of(std::vector<double> v)
{
    if (v.empty())
        return 0.0;
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    const double hi = *mid;
    if (v.size() % 2 == 1)
        return hi;
    const double lo = *std::max_element(v.begin(), mid);
    return 0.5 * (lo + hi);
}

} // namespace

double detection_threshold(const Eigen::MatrixXd& signature, const DetectorConfig& config)
{
    std::vector<double> mags(signature.data(), signature.data() + signature.size());
    double peak = 0.0;
    for (double& m : mags) {
        m = std::abs(m);
        peak = std::max(peak, m);
    }
    const double med = median_of(mags);
    for (double& m : mags)
        m = std::abs(m - med);
    const double mad = median_of(std::move(mags));
    // floor at round-off level so an exactly static band never triggers
    return std::max(med + config.threshold_c * mad, 1e-9 * peak);
}

double signature_strength(double band_value, StrengthMode mode)
{
    return mode == StrengthMode::rise ? band_value : std::abs(band_value);
}

std::vector<AngularEstimate> estimate_angles(const BandSplit& split, const SectorPartition& partition,
                                             std::span<const std::size_t> epoch_of_row,
                                             const DetectorConfig& config)
{
    const Eigen::MatrixXd& sig = split.signature;
    if (static_cast<std::size_t>(sig.cols()) != partition.n_sectors)
        throw std::invalid_argument("estimate_angles: signature width does not match partition");
    if (!epoch_of_row.empty() && epoch_of_row.size() != static_cast<std::size_t>(sig.rows()))
        throw std::invalid_argument("estimate_angles: epoch list does not match signature rows");

    const double threshold = detection_threshold(sig, config);
    std::vector<AngularEstimate> out;
    out.reserve(static_cast<std::size_t>(sig.rows()));
    for (Eigen::Index r = 0; r < sig.rows(); ++r) {
        AngularEstimate est;
        est.epoch = epoch_of_row.empty() ? static_cast<std::size_t>(r) : epoch_of_row[static_cast<std::size_t>(r)];
        Eigen::Index best = 0;
        est.strength = -std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < sig.cols(); ++k) {
            const double s = signature_strength(sig(r, k), config.strength);
            if (s > est.strength) {
                est.strength = s;
                best = k;
            }
        }
        if (est.strength > threshold) {
            est.sector = static_cast<std::size_t>(best);
            est.bearing_deg = partition.orientation_deg(*est.sector);
        }
        out.push_back(est);
    }
    return out;
}

SignatureResult extract_signature(const SensingMatrix& matrix, const BandChoice& bands,
                                  const DetectorConfig& detector)
{
    SignatureResult res;
    res.factors = svd(matrix.values_db);
    const std::size_t r = res.factors.rank;
    if (r == 0) {
        const auto zero = Eigen::MatrixXd::Zero(matrix.values_db.rows(), matrix.values_db.cols());
        res.split = {0, 0, zero, zero, zero};
    } else {
        std::size_t l0 = 1;
        std::size_t l1 = 1;
        if (bands.fixed) {
            l1 = std::min(bands.fixed->second, r);
            l0 = std::min(bands.fixed->first, l1);
        } else if (r >= 3) {
            const auto& sv = res.factors.singular_values;
            std::tie(l0, l1) = suggest_bands(std::span<const double>(sv.data(), static_cast<std::size_t>(sv.size())));
        }
        res.split = split_bands(res.factors, std::max<std::size_t>(l0, 1), std::max<std::size_t>(l1, 1));
    }
    res.threshold = detection_threshold(res.split.signature, detector);
    res.estimates = estimate_angles(res.split, matrix.partition, matrix.epoch_of_row, detector);
    return res;
}

void write_signature_csv(std::ostream& os, const SensingMatrix& matrix, const SignatureResult& result,
                         StrengthMode mode)
{
    os.precision(12);
    os << "epoch,sector,strength,detected\n";
    const Eigen::MatrixXd& sig = result.split.signature;
    for (Eigen::Index r = 0; r < sig.rows(); ++r) {
        const auto& est = result.estimates[static_cast<std::size_t>(r)];
        for (Eigen::Index k = 0; k < sig.cols(); ++k) {
            const bool hit = est.sector && *est.sector == static_cast<std::size_t>(k);
            os << matrix.epoch_of_row[static_cast<std::size_t>(r)] << ',' << k << ','
               << signature_strength(sig(r, k), mode) << ',' << (hit ? 1 : 0) << '\n';
        }
    }
}

void write_estimates_csv(std::ostream& os, const std::vector<AngularEstimate>& estimates)
{
    os.precision(12);
    os << "epoch,bearing_deg\n";
    for (const auto& e : estimates) {
        os << e.epoch << ',';
        if (e.bearing_deg)
            os << *e.bearing_deg;
        os << '\n';
    }
}

} // namespace sidelobe
