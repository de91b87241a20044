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
#include <string_view>
#include <vector>

namespace lpdamimo {

/// Which polarization-loss expression to use for the incline angle between the two
/// antennas of a slant pair.
///   Printed:    cos(alpha / 2 - 45 deg)
///   Recentered: cos(alpha - 90 deg)
enum class PlfConvention { Printed, Recentered };

PlfConvention parse_plf_convention(std::string_view text);

/// Polarization loss factor for an incline angle in (0, 180) degrees.
double plf(double incline_angle, PlfConvention convention = PlfConvention::Printed);

/// 20 log10 |plf|.
double plf_db(double plf_linear);

struct SlantPlacement {
    double incline_angle = 0.0;  // degrees
    double assembly_width = 0.0; // mm
    double height = 0.0;         // mm, W cos(alpha)
    double spread = 0.0;         // mm, 2 W sin(alpha)
    double plf_linear = 0.0;
    double plf_db = 0.0;
};

SlantPlacement placement_dims(double assembly_width, double incline_angle,
                              PlfConvention convention = PlfConvention::Printed);

struct PlacementConstraints {
    double min_height = 0.0; // mm
    double min_spread = 0.0; // mm
};

/// Closed interval of incline angles in degrees. lower_open marks the degenerate 0 deg
/// endpoint, which is excluded.
struct AngleInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = false;
};

/// Angles in (0, 90] where both the height and spread constraints hold, solved in
/// closed form. nullopt when no angle qualifies.
std::optional<AngleInterval> feasible_angles(double assembly_width, const PlacementConstraints& constraints);

struct TradeoffRow {
    double alpha = 0.0;
    double height = 0.0;
    double spread = 0.0;
    double plf_linear = 0.0;
    double plf_db = 0.0;
};

/// Rows at start, start + step, ... up to stop inclusive; angles must lie in [0, 180].
std::vector<TradeoffRow> tradeoff_sweep(double assembly_width, double start, double stop, double step,
                                        PlfConvention convention = PlfConvention::Printed);

} // namespace lpdamimo
