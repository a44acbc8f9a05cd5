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

#include "sidelobe/angles.hpp"

#include <cmath>

namespace sidelobe {

double wrap_deg_360(double deg)
{
    double r = std::fmod(deg, 360.0);
    if (r < 0.0)
        r += 360.0;
    // fmod of a tiny negative value can round up to exactly 360
    if (r >= 360.0)
        r -= 360.0;
    return r;
}

double wrap_deg(double deg)
{
    const double r = wrap_deg_360(deg);
    return r > 180.0 ? r - 360.0 : r;
}

double angular_distance_deg(double a_deg, double b_deg)
{
    const double d = wrap_deg_360(a_deg - b_deg);
    return d > 180.0 ? 360.0 - d : d;
}

} // namespace sidelobe
