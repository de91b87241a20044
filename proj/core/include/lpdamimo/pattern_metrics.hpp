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

#include <optional>
#include <vector>

#include "lpdamimo/far_field_pattern.hpp"

namespace lpdamimo {

enum class PrincipalPlane { E, H };

/// Grid direction of maximum total power; ties go to the smallest theta, then phi.
struct Boresight {
    std::size_t theta_index = 0;
    std::size_t phi_index = 0;
    double theta = 0.0; // degrees
    double phi = 0.0;   // degrees
};

Boresight find_boresight(const FarFieldPattern& pattern);

/// Closed-surface integral of total power, trapezoidal in theta with sin(theta) weight.
double integrated_power(const FarFieldPattern& pattern);

/// Peak directivity in dBi. Throws Precondition for an all-zero pattern.
double directivity(const FarFieldPattern& pattern);

/// Directive gain (dBi) toward an arbitrary direction, interpolated on the grid.
double gain_toward(const FarFieldPattern& pattern, double theta_deg, double phi_deg);

/// Directivity reduced by radiation efficiency and mismatch loss.
double realized_gain(double directivity_dbi, Complex reflection, double efficiency);

inline constexpr double kDefaultEfficiency = 0.85;

/// Half-power beamwidth in degrees in a principal plane through the boresight.
///
/// The E-plane is the great circle through the boresight and the z (dipole) axis; the
/// H-plane is the great circle through the boresight orthogonal to it. The search walks
/// outward from the boresight and keeps the first half-power crossing on each side,
/// interpolating linearly in dB. Returns nullopt when a side never drops by half.
std::optional<double> hpbw(const FarFieldPattern& pattern, PrincipalPlane plane);

/// Boresight power over the antipodal power in dB. A null behind the antenna is floored
/// at 300 dB.
double front_to_back(const FarFieldPattern& pattern);

struct SlantComponents {
    std::vector<Complex> co;    // +45 degree component, (E_theta + E_phi) / sqrt(2)
    std::vector<Complex> cross; // -45 degree component, (E_theta - E_phi) / sqrt(2)
    double cross_pol_ratio = 0.0; // dB at the boresight, clipped to +-300
};

SlantComponents slant_components(const FarFieldPattern& pattern);

struct PatternMetrics {
    double directivity = 0.0;    // dBi
    double realized_gain = 0.0;  // dBi
    std::optional<double> hpbw_e_plane;
    std::optional<double> hpbw_h_plane;
    double front_to_back = 0.0;  // dB
    double cross_pol_ratio = 0.0; // dB
    Boresight boresight;
};

PatternMetrics compute_metrics(const FarFieldPattern& pattern, Complex reflection,
                               double efficiency = kDefaultEfficiency);

} // namespace lpdamimo
