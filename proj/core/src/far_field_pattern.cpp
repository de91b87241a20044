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

#include "lpdamimo/far_field_pattern.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lpdamimo/error.hpp"

namespace lpdamimo {

std::size_t grid_divisions(double span_deg, double step_deg) {
    require(std::isfinite(step_deg) && step_deg > 0.0 && step_deg <= span_deg,
            fmt::format("grid step {} must lie in (0, {}]", step_deg, span_deg));
    const double n = span_deg / step_deg;
    const double rounded = std::round(n);
    require(std::abs(n - rounded) < 1e-9 * std::max(1.0, n),
            fmt::format("grid step {} does not divide {} evenly", step_deg, span_deg));
    return static_cast<std::size_t>(rounded);
}

FarFieldPattern::FarFieldPattern(double frequency, double theta_step, double phi_step, std::vector<Complex> e_theta,
                                 std::vector<Complex> e_phi)
    : frequency_(frequency), theta_step_(theta_step), phi_step_(phi_step),
      theta_count_(grid_divisions(180.0, theta_step) + 1), phi_count_(grid_divisions(360.0, phi_step)),
      e_theta_(std::move(e_theta)), e_phi_(std::move(e_phi)) {
    require(frequency_ > 0.0, "pattern frequency must be positive");
    require(e_theta_.size() == size() && e_phi_.size() == size(),
            fmt::format("pattern expects {}x{} samples", theta_count_, phi_count_));
}

FarFieldPattern FarFieldPattern::sample(double frequency, double theta_step, double phi_step, const FieldFunction& field) {
    const std::size_t nt = grid_divisions(180.0, theta_step) + 1;
    const std::size_t np = grid_divisions(360.0, phi_step);
    std::vector<Complex> et(nt * np), ep(nt * np);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            auto [a, b] = field(static_cast<double>(i) * theta_step, static_cast<double>(j) * phi_step);
            et[i * np + j] = a;
            ep[i * np + j] = b;
        }
    return FarFieldPattern(frequency, theta_step, phi_step, std::move(et), std::move(ep));
}

FarFieldPattern::Stencil FarFieldPattern::stencil(double theta_deg, double phi_deg) const {
    const double t = std::clamp(theta_deg, 0.0, 180.0) / theta_step_;
    auto i0 = static_cast<std::size_t>(std::floor(t));
    if (i0 >= theta_count_ - 1)
        i0 = theta_count_ - 2;
    const double wt = std::clamp(t - static_cast<double>(i0), 0.0, 1.0);

    double p = std::fmod(phi_deg, 360.0);
    if (p < 0.0)
        p += 360.0;
    const double pf = p / phi_step_;
    auto j0 = static_cast<std::size_t>(std::floor(pf)) % phi_count_;
    const double wp = std::clamp(pf - std::floor(pf), 0.0, 1.0);
    return {i0, i0 + 1, j0, (j0 + 1) % phi_count_, wt, wp};
}

double FarFieldPattern::power_at(double theta_deg, double phi_deg) const {
    const auto s = stencil(theta_deg, phi_deg);
    const double p00 = power(s.i0, s.j0), p01 = power(s.i0, s.j1);
    const double p10 = power(s.i1, s.j0), p11 = power(s.i1, s.j1);
    return (1 - s.wt) * ((1 - s.wp) * p00 + s.wp * p01) + s.wt * ((1 - s.wp) * p10 + s.wp * p11);
}

std::pair<Complex, Complex> FarFieldPattern::field_at(double theta_deg, double phi_deg) const {
    const auto s = stencil(theta_deg, phi_deg);
    auto blend = [&](const std::vector<Complex>& f) {
        return (1 - s.wt) * ((1 - s.wp) * f[index(s.i0, s.j0)] + s.wp * f[index(s.i0, s.j1)]) +
               s.wt * ((1 - s.wp) * f[index(s.i1, s.j0)] + s.wp * f[index(s.i1, s.j1)]);
    };
    return {blend(e_theta_), blend(e_phi_)};
}

bool FarFieldPattern::same_grid(const FarFieldPattern& other) const {
    return theta_count_ == other.theta_count_ && phi_count_ == other.phi_count_ &&
           std::abs(theta_step_ - other.theta_step_) < 1e-12 && std::abs(phi_step_ - other.phi_step_) < 1e-12;
}

} // namespace lpdamimo
