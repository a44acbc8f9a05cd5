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

#include <numbers>

namespace sidelobe {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle in degrees to (-180, 180].
double wrap_deg(double deg);

/// Wraps an angle in degrees to [0, 360).
double wrap_deg_360(double deg);

/// Smallest absolute angular distance between two bearings, in [0, 180].
double angular_distance_deg(double a_deg, double b_deg);

} // namespace sidelobe
