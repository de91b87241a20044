// SPDX-License-Identifier: Apache-2.0
//
// lpdamimo: log-periodic slant-polarized MIMO antenna design toolkit
// Copyright (C) 2026 The lpdamimo authors
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

namespace lpdamimo {

// Repo-wide units: millimeters, megahertz, degrees, ohms.

/// Speed of light in mm * MHz.
inline constexpr double kSpeedOfLight = 299792.458;

/// Free-space wave impedance in ohms.
inline constexpr double kEta0 = 376.730313668;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Free-space wavelength in mm for a frequency in MHz.
constexpr double wavelength_mm(double frequency_mhz) { return kSpeedOfLight / frequency_mhz; }

/// Free-space wavenumber in rad/mm.
constexpr double wavenumber(double frequency_mhz) { return 2.0 * kPi * frequency_mhz / kSpeedOfLight; }

} // namespace lpdamimo
