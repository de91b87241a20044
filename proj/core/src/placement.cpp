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

#include "lpdamimo/placement.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lpdamimo/error.hpp"
#include "lpdamimo/units.hpp"

namespace lpdamimo {

namespace {

double plf_unchecked(double alpha, PlfConvention convention) {
    return convention == PlfConvention::Printed ? std::cos(deg_to_rad(alpha / 2.0 - 45.0))
                                                : std::cos(deg_to_rad(alpha - 90.0));
}

void check_angle(double alpha) {
    if (!(alpha > 0.0 && alpha < 180.0))
        fail(ErrorKind::Precondition, fmt::format("incline angle {} deg outside (0, 180)", alpha));
}

} // namespace

PlfConvention parse_plf_convention(std::string_view text) {
    if (text == "printed")
        return PlfConvention::Printed;
    if (text == "recentered")
        return PlfConvention::Recentered;
    fail(ErrorKind::UnknownLabel, fmt::format("unknown plf convention '{}' (printed | recentered)", text));
}

double plf(double incline_angle, PlfConvention convention) {
    check_angle(incline_angle);
    return plf_unchecked(incline_angle, convention);
}

double plf_db(double plf_linear) { return 20.0 * std::log10(std::abs(plf_linear)); }

SlantPlacement placement_dims(double assembly_width, double incline_angle, PlfConvention convention) {
    require(assembly_width > 0.0, "assembly width must be positive");
    check_angle(incline_angle);
    const double a = deg_to_rad(incline_angle);
    SlantPlacement p;
    p.incline_angle = incline_angle;
    p.assembly_width = assembly_width;
    p.height = assembly_width * std::cos(a);
    p.spread = 2.0 * assembly_width * std::sin(a);
    p.plf_linear = plf_unchecked(incline_angle, convention);
    p.plf_db = plf_db(p.plf_linear);
    return p;
}

std::optional<AngleInterval> feasible_angles(double assembly_width, const PlacementConstraints& c) {
    require(assembly_width > 0.0, "assembly width must be positive");
    require(c.min_height >= 0.0 && c.min_spread >= 0.0, "placement constraints must be non-negative");
    if (c.min_height > assembly_width || c.min_spread > 2.0 * assembly_width)
        return std::nullopt;
    AngleInterval out;
    // Spread grows and height shrinks on (0, 90], so each constraint bounds one side.
    out.lower = rad_to_deg(std::asin(c.min_spread / (2.0 * assembly_width)));
    out.lower_open = c.min_spread == 0.0;
    out.upper = c.min_height == 0.0 ? 90.0 : rad_to_deg(std::acos(c.min_height / assembly_width));
    if (out.lower > out.upper || (out.lower_open && out.upper == 0.0))
        return std::nullopt;
    return out;
}

std::vector<TradeoffRow> tradeoff_sweep(double assembly_width, double start, double stop, double step,
                                        PlfConvention convention) {
    require(assembly_width > 0.0, "assembly width must be positive");
    require(step > 0.0, "sweep step must be positive");
    require(start >= 0.0 && stop <= 180.0 && start <= stop, fmt::format("sweep {}..{} outside [0, 180]", start, stop));
    std::vector<TradeoffRow> rows;
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = start + static_cast<double>(i) * step;
        const double a = deg_to_rad(alpha);
        const double v = plf_unchecked(alpha, convention);
        rows.push_back({alpha, assembly_width * std::cos(a), 2.0 * assembly_width * std::sin(a), v, plf_db(v)});
    }
    return rows;
}

} // namespace lpdamimo
