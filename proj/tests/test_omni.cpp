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
#include <filesystem>

#include <lpdamimo/em_surrogate.hpp>
#include <lpdamimo/io.hpp>
#include <lpdamimo/omni.hpp>
#include <lpdamimo/pattern_metrics.hpp>
#include <lpdamimo/units.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lpdamimo;
namespace fs = std::filesystem;

namespace {

double rad(double deg) { return deg * kPi / 180.0; }

FarFieldPattern sector(double step = 1.0) {
    return FarFieldPattern::sample(800, step, step, [](double t, double p) {
        const double v = std::max(0.0, std::sin(rad(t)) * std::cos(rad(p)));
        return std::pair<Complex, Complex>{v, 0.0};
    });
}

FarFieldPattern isotropic(double step = 5.0) {
    return FarFieldPattern::sample(800, step, step, [](double, double) {
        return std::pair<Complex, Complex>{1.0, 0.0};
    });
}

FarFieldPattern lopsided(double step = 5.0) {
    return FarFieldPattern::sample(2400, step, step, [](double t, double p) {
        const double s = std::sin(rad(t));
        return std::pair<Complex, Complex>{Complex(s * (1.2 + std::cos(rad(p))), 0.3 * s * std::sin(rad(p))),
                                           Complex(0.1 * std::cos(rad(t)), 0.0)};
    });
}

OmniSet uniform_set(const FarFieldPattern& p, Band band = Band::LB) {
    std::vector<PoleAssembly> v;
    for (Pole pole : {Pole::North, Pole::East, Pole::South, Pole::West}) {
        PoleAssembly a;
        a.pole = pole;
        (band == Band::LB ? a.lb_pattern : a.hb_pattern) = p;
        v.push_back(a);
    }
    return OmniSet(std::move(v));
}

FarFieldPattern lb_surrogate(double step = 5.0) {
    const auto geo = prototype_fixture("LB");
    return far_field(solve_drive(geo, 800.0), geo, step);
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("lpdamimo_omni_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("ideal sectors hand over three decibels down") {
    const auto prof = composite_coverage(uniform_set(sector()), Band::LB);
    const double expected = -10.0 * std::log10(std::pow(std::cos(rad(45.0)), 2));
    CHECK(prof.crossover_depth == doctest::Approx(expected).epsilon(1e-9));
    CHECK(prof.crossover_depth == doctest::Approx(3.0).epsilon(0.1 / 3.0));
    CHECK(prof.ripple == doctest::Approx(expected).epsilon(1e-9));
    CHECK(prof.azimuth.size() == 360);
}

TEST_CASE("isotropic poles give a flat ring") {
    const auto prof = composite_coverage(uniform_set(isotropic()), Band::LB);
    CHECK(prof.ripple == doctest::Approx(0.0).epsilon(1e-12));
    for (double g : prof.best_gain)
        CHECK(std::abs(g) < 0.01);
    for (int p : prof.best_pole)
        CHECK(p == 0);
}

TEST_CASE("pole selection follows the sector boresights") {
    const auto set = uniform_set(sector());
    CHECK(select_pole(set, 0.0, Band::LB).pole == 0);
    CHECK(select_pole(set, 45.0, Band::LB).pole == 0);
    CHECK(select_pole(set, 90.0, Band::LB).pole == 1);
    CHECK(select_pole(set, 180.0, Band::LB).pole == 2);
    CHECK(select_pole(set, 269.0, Band::LB).pole == 3);
    CHECK(select_pole(set, -10.0, Band::LB).pole == 0);
    CHECK(select_pole(set, 370.0, Band::LB).pole == 0);
}

TEST_CASE("sector pole map has four quarter arcs") {
    const auto arcs = pole_arcs(composite_coverage(uniform_set(sector()), Band::LB));
    REQUIRE(arcs.size() == 4);
    double total = 0;
    std::array<bool, 4> seen{};
    for (const auto& a : arcs) {
        CHECK(a.end - a.start == doctest::Approx(90.0));
        total += a.end - a.start;
        seen[static_cast<std::size_t>(a.pole)] = true;
        const double mid = std::fmod(0.5 * (a.start + a.end), 360.0);
        CHECK(mid == doctest::Approx(pole_azimuth(static_cast<Pole>(a.pole))));
    }
    CHECK(total == doctest::Approx(360.0));
    CHECK(seen == std::array<bool, 4>{true, true, true, true});
}

TEST_CASE("grid-aligned rotations are exact") {
    const auto p = lopsided();
    const auto r0 = rotate_pattern(p, 0.0);
    CHECK(r0.e_theta() == p.e_theta());
    CHECK(r0.e_phi() == p.e_phi());
    auto r = p;
    for (int i = 0; i < 4; ++i)
        r = rotate_pattern(r, 90.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(std::abs(r.e_theta()[k] - p.e_theta()[k]) <= 1e-12);
        CHECK(std::abs(r.e_phi()[k] - p.e_phi()[k]) <= 1e-12);
    }
    const auto q = rotate_pattern(p, 90.0);
    for (std::size_t i = 0; i < p.theta_count(); i += 3)
        for (std::size_t j = 0; j < p.phi_count(); j += 5)
            CHECK(q.power_at(p.theta_deg(i), p.phi_deg(j) + 90.0) == doctest::Approx(p.power(i, j)).epsilon(1e-12));
}

TEST_CASE("property: rotation preserves radiated power") {
    const auto p = lopsided(2.0);
    const double total = integrated_power(p);
    for (double az : {12.0, 90.0, 133.0, 271.0, -45.0}) {
        const auto r = rotate_pattern(p, az);
        CHECK(integrated_power(r) == doctest::Approx(total).epsilon(2e-3));
        CHECK(directivity(r) == doctest::Approx(directivity(p)).epsilon(2e-3));
    }
    const auto iso = isotropic();
    const auto ri = rotate_pattern(iso, 37.5);
    for (std::size_t k = 0; k < iso.size(); ++k)
        CHECK(std::abs(ri.e_theta()[k] - iso.e_theta()[k]) <= 1e-12);
}

TEST_CASE("property: coverage is equivariant under a common rotation") {
    const auto p = lopsided();
    const auto base = composite_coverage(uniform_set(p, Band::HB), Band::HB);
    const auto turned = composite_coverage(uniform_set(rotate_pattern(p, 30.0), Band::HB), Band::HB);
    const std::size_t n = base.azimuth.size(), shift = 6;
    for (std::size_t j = 0; j < n; ++j)
        CHECK(turned.best_gain[(j + shift) % n] == doctest::Approx(base.best_gain[j]).epsilon(1e-9));
    CHECK(turned.ripple == doctest::Approx(base.ripple).epsilon(1e-9));
}

TEST_CASE("property: field scaling does not move the envelope") {
    const auto p = lopsided();
    auto scaled_theta = p.e_theta(), scaled_phi = p.e_phi();
    for (auto& v : scaled_theta)
        v *= 31.6;
    for (auto& v : scaled_phi)
        v *= 31.6;
    const FarFieldPattern q(p.frequency(), p.theta_step(), p.phi_step(), scaled_theta, scaled_phi);
    std::vector<PoleAssembly> v;
    for (Pole pole : {Pole::North, Pole::East, Pole::South, Pole::West}) {
        PoleAssembly a;
        a.pole = pole;
        a.hb_pattern = pole == Pole::East ? q : p;
        v.push_back(a);
    }
    const auto mixed = composite_coverage(OmniSet(std::move(v)), Band::HB);
    const auto plain = composite_coverage(uniform_set(p, Band::HB), Band::HB);
    CHECK(mixed.ripple == doctest::Approx(plain.ripple).epsilon(1e-9));
    CHECK(mixed.best_pole == plain.best_pole);
}

TEST_CASE("property: envelope dominates every pole and selection agrees with it") {
    const auto prof = composite_coverage(uniform_set(lopsided(), Band::HB), Band::HB);
    const auto set = uniform_set(lopsided(), Band::HB);
    for (std::size_t j = 0; j < prof.azimuth.size(); ++j) {
        for (double g : prof.pole_gain[j])
            CHECK(prof.best_gain[j] >= g - 1e-12);
        CHECK(prof.best_gain[j] ==
              doctest::Approx(prof.pole_gain[j][static_cast<std::size_t>(prof.best_pole[j])]).epsilon(1e-12));
        const auto sel = select_pole(set, prof.azimuth[j], Band::HB);
        CHECK(sel.pole == prof.best_pole[j]);
        CHECK(sel.gain == doctest::Approx(prof.best_gain[j]).epsilon(1e-12));
    }
    CHECK(prof.ripple == doctest::Approx(prof.max_gain - prof.min_gain).epsilon(1e-12));
}

TEST_CASE("low-band surrogate omni ring") {
    const auto set = uniform_set(lb_surrogate());
    const auto prof = composite_coverage(set, Band::LB);
    CHECK(prof.ripple <= 3.5);
    CHECK(prof.min_gain >= prof.max_gain - 3.5);
    CHECK(prof.crossover_depth <= prof.ripple + 1e-12);
    const auto arcs = pole_arcs(prof);
    CHECK(arcs.size() == 4);
}

TEST_CASE("elevated ring and its bounds") {
    const auto set = uniform_set(lb_surrogate());
    const auto up = composite_coverage(set, Band::LB, 30.0);
    CHECK(up.elevation == 30.0);
    CHECK(up.max_gain < composite_coverage(set, Band::LB).max_gain);
    CHECK(error_kind([&] { composite_coverage(set, Band::LB, 95.0); }) == ErrorKind::Precondition);
}

TEST_CASE("omni set construction checks") {
    PoleAssembly a;
    a.lb_pattern = isotropic();
    CHECK(error_kind([&] { OmniSet({a, a, a}); }) == ErrorKind::Precondition);
    CHECK(error_kind([&] { OmniSet({a, a, a, a}); }) == ErrorKind::Precondition);
    std::vector<PoleAssembly> v;
    for (Pole pole : {Pole::West, Pole::South, Pole::East, Pole::North}) {
        a.pole = pole;
        v.push_back(a);
    }
    const OmniSet set(v);
    CHECK(set[0].pole == Pole::North);
    CHECK(set[3].pole == Pole::West);
    CHECK(error_kind([&] { composite_coverage(set, Band::HB); }) == ErrorKind::Precondition);
}

TEST_CASE("mismatched pattern grids are rejected") {
    std::vector<PoleAssembly> v;
    for (Pole pole : {Pole::North, Pole::East, Pole::South, Pole::West}) {
        PoleAssembly a;
        a.pole = pole;
        a.lb_pattern = pole == Pole::South ? isotropic(2.0) : isotropic(5.0);
        v.push_back(a);
    }
    CHECK(error_kind([&] { composite_coverage(OmniSet(v), Band::LB); }) == ErrorKind::Precondition);
}

TEST_CASE("band labels") {
    CHECK(parse_band("LB") == Band::LB);
    CHECK(parse_band("hb") == Band::HB);
    CHECK(error_kind([] { parse_band("MB"); }) == ErrorKind::UnknownLabel);
    CHECK(pole_letter(Pole::East) == 'E');
}

TEST_CASE("coverage report writes one row per azimuth sample") {
    const auto dir = scratch("report");
    const auto rep = coverage_report(uniform_set(sector(5.0)), dir);
    REQUIRE(rep.profiles.size() == 1);
    CHECK(fs::exists(dir / "coverage_LB.csv"));
    CHECK(fs::exists(dir / "pole_map_LB.csv"));
    CHECK(fs::exists(dir / "coverage_summary.txt"));
    CHECK_FALSE(fs::exists(dir / "coverage_HB.csv"));
    const auto text = read_text(dir / "coverage_LB.csv");
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 72);
    CHECK(rep.summary.find("ripple_db") != std::string::npos);
    std::vector<PoleAssembly> none(4);
    for (int k = 0; k < 4; ++k)
        none[static_cast<std::size_t>(k)].pole = static_cast<Pole>(k);
    CHECK(error_kind([&] { coverage_report(OmniSet(none), dir); }) == ErrorKind::Precondition);
}
