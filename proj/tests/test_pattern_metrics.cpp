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

#include <doctest.h>

#include <cmath>

#include <lpdamimo/pattern_metrics.hpp>
#include <lpdamimo/units.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lpdamimo;

namespace {

using Field = std::pair<Complex, Complex>;

FarFieldPattern from_power(double step, std::function<double(double, double)> power) {
    return FarFieldPattern::sample(300.0, step, step, [&](double t, double p) -> Field {
        return {Complex(std::sqrt(std::max(0.0, power(deg_to_rad(t), deg_to_rad(p))))), Complex(0.0)};
    });
}

// Cosine of the angle from +x.
double cos_x(double t, double p) { return std::sin(t) * std::cos(p); }

} // namespace

TEST_CASE("isotropic pattern has 0 dBi") {
    const auto p = from_power(1.0, [](double, double) { return 1.0; });
    CHECK(std::abs(directivity(p)) < 0.01);
}

TEST_CASE("Hertzian pattern has 1.76 dBi") {
    const auto p = from_power(1.0, [](double t, double) { return std::sin(t) * std::sin(t); });
    CHECK(std::abs(directivity(p) - 10 * std::log10(1.5)) < 0.02);
    CHECK(std::abs(directivity(p) - 1.76) < 0.02);
}

TEST_CASE("half-wave dipole pattern has 2.15 dBi") {
    const double expected = 10 * std::log10(oracle::dipole_directivity(kPi / 2));
    CHECK(std::abs(expected - 2.15) < 0.01);
    const auto p = from_power(1.0, [](double t, double) {
        const double a = oracle::dipole_pattern(kPi / 2, t);
        return a * a;
    });
    CHECK(std::abs(directivity(p) - expected) < 0.05);
    CHECK(std::abs(directivity(p) - 2.15) < 0.05);
}

TEST_CASE("directivity ignores overall scale") {
    const auto base = from_power(2.0, [](double t, double p) { return 1.0 + std::pow(std::max(0.0, cos_x(t, p)), 4); });
    const double d0 = directivity(base);
    for (double k : {1e-6, 0.3, 7.0, 1e5}) {
        const auto scaled = from_power(2.0, [k](double t, double p) {
            return k * (1.0 + std::pow(std::max(0.0, cos_x(t, p)), 4));
        });
        CHECK(directivity(scaled) == doctest::Approx(d0).epsilon(1e-12));
    }
}

TEST_CASE("grid refinement barely moves directivity of smooth patterns") {
    auto f = [](double t, double p) { return std::pow(std::max(0.0, cos_x(t, p)), 2) + 0.01; };
    CHECK(std::abs(directivity(from_power(2.0, f)) - directivity(from_power(1.0, f))) < 0.05);
    auto g = [](double t, double) { return std::pow(std::sin(t), 2); };
    CHECK(std::abs(directivity(from_power(2.0, g)) - directivity(from_power(1.0, g))) < 0.05);
}

TEST_CASE("all-zero pattern has no directivity") {
    const auto p = from_power(5.0, [](double, double) { return 0.0; });
    CHECK(error_kind([&] { directivity(p); }) == ErrorKind::Precondition);
}

TEST_CASE("realized gain") {
    CHECK(realized_gain(8.0, Complex(0), 1.0) == doctest::Approx(8.0));
    CHECK(realized_gain(8.0, Complex(1.0 / 3.0), 1.0) == doctest::Approx(8.0 + 10 * std::log10(8.0 / 9.0)));
    CHECK(realized_gain(8.0, Complex(1.0 / 3.0), 1.0) == doctest::Approx(7.49).epsilon(1e-3));
    CHECK(realized_gain(8.0, Complex(0), 0.85) == doctest::Approx(8.0 + 10 * std::log10(0.85)));
    CHECK(error_kind([] { realized_gain(8.0, Complex(0), 0.0); }) == ErrorKind::Precondition);
    CHECK(error_kind([] { realized_gain(8.0, Complex(0), 1.2); }) == ErrorKind::Precondition);
    CHECK(error_kind([] { realized_gain(8.0, Complex(1.0), 1.0); }) == ErrorKind::Precondition);
    CHECK(error_kind([] { realized_gain(8.0, Complex(0.6, 0.9), 1.0); }) == ErrorKind::Precondition);
}

TEST_CASE("cos^2 beam is 90 degrees wide") {
    // Beam along +x, back hemisphere dark.
    const auto p = from_power(1.0, [](double t, double ph) { return std::pow(std::max(0.0, cos_x(t, ph)), 2); });
    const auto e = hpbw(p, PrincipalPlane::E), h = hpbw(p, PrincipalPlane::H);
    REQUIRE(e.has_value());
    REQUIRE(h.has_value());
    CHECK(std::abs(*e - 90.0) < 0.5);
    CHECK(std::abs(*h - 90.0) < 0.5);
}

TEST_CASE("cos^2 theta about the polar axis") {
    const auto p = from_power(1.0, [](double t, double) { return std::pow(std::cos(t), 2); });
    const auto e = hpbw(p, PrincipalPlane::E);
    REQUIRE(e.has_value());
    CHECK(std::abs(*e - 90.0) < 0.5);
}

TEST_CASE("cos^4 beam width from the bisection oracle") {
    const double expected = 2 * oracle::cos_power_half_angle(2);
    CHECK(std::abs(expected - 65.5) < 0.1);
    const auto p = from_power(1.0, [](double t, double ph) { return std::pow(std::max(0.0, cos_x(t, ph)), 4); });
    CHECK(std::abs(*hpbw(p, PrincipalPlane::E) - expected) < 0.5);
    CHECK(std::abs(*hpbw(p, PrincipalPlane::H) - expected) < 0.5);
}

TEST_CASE("property: cos^(2m) beams match the closed-form half-power angle") {
    for (int m = 1; m <= 8; ++m) {
        const double expected = 2 * oracle::cos_power_half_angle(m);
        const auto p =
            from_power(1.0, [m](double t, double ph) { return std::pow(std::max(0.0, cos_x(t, ph)), 2 * m); });
        CHECK(std::abs(*hpbw(p, PrincipalPlane::E) - expected) < 0.5);
        CHECK(std::abs(*hpbw(p, PrincipalPlane::H) - expected) < 0.5);
    }
}

TEST_CASE("elliptical beam separates the planes") {
    // Narrow in elevation (E-plane through z), broad in azimuth.
    const auto p = from_power(1.0, [](double t, double ph) {
        const double el = std::cos(t), az = std::sin(t) * std::sin(ph);
        if (cos_x(t, ph) <= 0)
            return 0.0;
        return std::exp(-el * el / 0.1) * std::exp(-az * az / 0.4);
    });
    CHECK(*hpbw(p, PrincipalPlane::E) < *hpbw(p, PrincipalPlane::H));
}

TEST_CASE("broad patterns report no beamwidth") {
    const auto iso = from_power(2.0, [](double, double) { return 1.0; });
    CHECK_FALSE(hpbw(iso, PrincipalPlane::E).has_value());
    CHECK_FALSE(hpbw(iso, PrincipalPlane::H).has_value());
}

TEST_CASE("front-to-back") {
    const auto dip = from_power(1.0, [](double t, double) { return std::pow(std::sin(t), 2); });
    CHECK(std::abs(front_to_back(dip)) < 1e-9);
    const auto card = from_power(1.0, [](double t, double ph) { return std::pow(1.0 + cos_x(t, ph), 2); });
    CHECK(front_to_back(card) >= 40.0);
}

TEST_CASE("boresight ties go to the smallest theta then phi") {
    const auto iso = from_power(5.0, [](double, double) { return 1.0; });
    const auto b = find_boresight(iso);
    CHECK(b.theta_index == 0);
    CHECK(b.phi_index == 0);
}

TEST_CASE("slant decomposition") {
    auto make = [](Complex et, Complex ep) {
        return FarFieldPattern::sample(300.0, 5.0, 5.0, [=](double t, double p) -> Field {
            const double a = std::pow(std::max(0.0, std::sin(deg_to_rad(t)) * std::cos(deg_to_rad(p))), 2);
            return {a * et, a * ep};
        });
    };
    const auto vertical = slant_components(make(1.0, 0.0));
    CHECK(std::abs(vertical.cross_pol_ratio) < 1e-9);
    const auto plus45 = slant_components(make(1.0, 1.0));
    CHECK(plus45.cross_pol_ratio >= 60.0);
    const auto minus45 = slant_components(make(1.0, -1.0));
    CHECK(minus45.cross_pol_ratio <= -60.0);
    for (std::size_t i = 0; i < plus45.co.size(); ++i) {
        CHECK(std::abs(plus45.co[i] - minus45.cross[i]) < 1e-15);
        CHECK(std::abs(plus45.cross[i] - minus45.co[i]) < 1e-15);
    }
}

TEST_CASE("property: slant rotation conserves power") {
    auto rng = oracle::rng(17);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = n(rng), b = n(rng), c = n(rng), d = n(rng);
        const auto p = FarFieldPattern::sample(300.0, 10.0, 10.0, [&](double t, double ph) -> Field {
            return {Complex(a * std::cos(deg_to_rad(t)), b * std::sin(deg_to_rad(ph))),
                    Complex(c * std::sin(deg_to_rad(t + ph)), d)};
        });
        const auto s = slant_components(p);
        double total = 0, split = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            total += std::norm(p.e_theta()[i]) + std::norm(p.e_phi()[i]);
            split += std::norm(s.co[i]) + std::norm(s.cross[i]);
        }
        CHECK(split == doctest::Approx(total).epsilon(1e-9));
    }
}

TEST_CASE("metrics bundle is consistent") {
    const auto p = from_power(1.0, [](double t, double ph) { return std::pow(std::max(0.0, cos_x(t, ph)), 4) + 1e-6; });
    const auto m = compute_metrics(p, Complex(0.2, 0.1));
    CHECK(m.realized_gain <= m.directivity);
    CHECK(m.directivity == doctest::Approx(directivity(p)));
    REQUIRE(m.hpbw_e_plane.has_value());
    CHECK(*m.hpbw_e_plane > 0.0);
    CHECK(*m.hpbw_e_plane < 360.0);
    CHECK(m.boresight.theta == 90.0);
    CHECK(m.boresight.phi == 0.0);
    CHECK(gain_toward(p, 90.0, 0.0) == doctest::Approx(m.directivity));
}
