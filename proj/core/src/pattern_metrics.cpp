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

#include "lpdamimo/pattern_metrics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lpdamimo/error.hpp"
#include "lpdamimo/units.hpp"

namespace lpdamimo {

namespace {

constexpr double kRatioFloor = 1e-30; // -300 dB

struct Vec3 {
    double x, y, z;
};

Vec3 unit_radial(double th, double ph) { return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)}; }
Vec3 unit_theta(double th, double ph) { return {std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th)}; }
Vec3 unit_phi(double ph) { return {-std::sin(ph), std::cos(ph), 0.0}; }

double ratio_db(double num, double den) {
    if (num <= 0.0 && den <= 0.0)
        return 0.0;
    return 10.0 * std::log10(std::max(num, den * kRatioFloor) / std::max(den, num * kRatioFloor));
}

} // namespace

Boresight find_boresight(const FarFieldPattern& p) {
    Boresight b;
    double best = -1.0;
    for (std::size_t i = 0; i < p.theta_count(); ++i)
        for (std::size_t j = 0; j < p.phi_count(); ++j) {
            const double v = p.power(i, j);
            if (v > best * (1.0 + 1e-12) && v > best) {
                best = v;
                b.theta_index = i;
                b.phi_index = j;
            }
        }
    b.theta = p.theta_deg(b.theta_index);
    b.phi = p.phi_deg(b.phi_index);
    return b;
}

double integrated_power(const FarFieldPattern& p) {
    const double dt = deg_to_rad(p.theta_step());
    const double dp = deg_to_rad(p.phi_step());
    double total = 0.0;
    for (std::size_t i = 0; i < p.theta_count(); ++i) {
        const double w = (i == 0 || i + 1 == p.theta_count()) ? 0.5 * dt : dt;
        double ring = 0.0;
        for (std::size_t j = 0; j < p.phi_count(); ++j)
            ring += p.power(i, j);
        total += w * std::sin(deg_to_rad(p.theta_deg(i))) * ring * dp;
    }
    return total;
}

double directivity(const FarFieldPattern& p) {
    const auto b = find_boresight(p);
    const double peak = p.power(b.theta_index, b.phi_index);
    const double total = integrated_power(p);
    require(peak > 0.0 && total > 0.0, "directivity of an all-zero pattern");
    return 10.0 * std::log10(4.0 * kPi * peak / total);
}

double gain_toward(const FarFieldPattern& p, double theta_deg, double phi_deg) {
    const double total = integrated_power(p);
    require(total > 0.0, "gain of an all-zero pattern");
    const double u = p.power_at(theta_deg, phi_deg);
    return 10.0 * std::log10(std::max(4.0 * kPi * u / total, kRatioFloor));
}

double realized_gain(double directivity_dbi, Complex reflection, double efficiency) {
    require(efficiency > 0.0 && efficiency <= 1.0, fmt::format("efficiency {} outside (0, 1]", efficiency));
    const double mag2 = std::norm(reflection);
    require(mag2 < 1.0, "|s11| must be below 1 for a realized gain");
    return directivity_dbi + 10.0 * std::log10(efficiency) + 10.0 * std::log10(1.0 - mag2);
}

std::optional<double> hpbw(const FarFieldPattern& p, PrincipalPlane plane) {
    const auto b = find_boresight(p);
    const double p0 = p.power(b.theta_index, b.phi_index);
    if (!(p0 > 0.0))
        return std::nullopt;
    const double th = deg_to_rad(b.theta), ph = deg_to_rad(b.phi);
    const Vec3 r = unit_radial(th, ph);
    const Vec3 t = plane == PrincipalPlane::E ? unit_theta(th, ph) : unit_phi(ph);
    const double threshold = 10.0 * std::log10(0.5);
    const double step = p.theta_step();
    const auto steps = static_cast<std::size_t>(std::llround(180.0 / step));

    auto level_db = [&](double psi_deg, double sign) {
        const double c = std::cos(deg_to_rad(psi_deg)), s = sign * std::sin(deg_to_rad(psi_deg));
        const Vec3 d{c * r.x + s * t.x, c * r.y + s * t.y, c * r.z + s * t.z};
        const double theta = rad_to_deg(std::acos(std::clamp(d.z, -1.0, 1.0)));
        const double phi = rad_to_deg(std::atan2(d.y, d.x));
        return 10.0 * std::log10(std::max(p.power_at(theta, phi), p0 * kRatioFloor) / p0);
    };

    double width = 0.0;
    for (double sign : {1.0, -1.0}) {
        double prev_psi = 0.0, prev_db = 0.0;
        bool found = false;
        for (std::size_t k = 1; k <= steps; ++k) {
            const double psi = static_cast<double>(k) * step;
            const double db = level_db(psi, sign);
            if (db <= threshold) {
                width += prev_psi + (psi - prev_psi) * (prev_db - threshold) / (prev_db - db);
                found = true;
                break;
            }
            prev_psi = psi;
            prev_db = db;
        }
        if (!found)
            return std::nullopt;
    }
    return width;
}

double front_to_back(const FarFieldPattern& p) {
    const auto b = find_boresight(p);
    const double front = p.power(b.theta_index, b.phi_index);
    double back;
    if (p.phi_count() % 2 == 0)
        back = p.power(p.theta_count() - 1 - b.theta_index, (b.phi_index + p.phi_count() / 2) % p.phi_count());
    else
        back = p.power_at(180.0 - b.theta, b.phi + 180.0);
    return ratio_db(front, back);
}

SlantComponents slant_components(const FarFieldPattern& p) {
    SlantComponents out;
    out.co.resize(p.size());
    out.cross.resize(p.size());
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out.co[k] = r * (p.e_theta()[k] + p.e_phi()[k]);
        out.cross[k] = r * (p.e_theta()[k] - p.e_phi()[k]);
    }
    const auto b = find_boresight(p);
    const std::size_t k = p.index(b.theta_index, b.phi_index);
    out.cross_pol_ratio = ratio_db(std::norm(out.co[k]), std::norm(out.cross[k]));
    return out;
}

PatternMetrics compute_metrics(const FarFieldPattern& pattern, Complex reflection, double efficiency) {
    PatternMetrics m;
    m.boresight = find_boresight(pattern);
    m.directivity = directivity(pattern);
    m.realized_gain = realized_gain(m.directivity, reflection, efficiency);
    m.hpbw_e_plane = hpbw(pattern, PrincipalPlane::E);
    m.hpbw_h_plane = hpbw(pattern, PrincipalPlane::H);
    m.front_to_back = front_to_back(pattern);
    m.cross_pol_ratio = slant_components(pattern).cross_pol_ratio;
    return m;
}

} // namespace lpdamimo
