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

#include "lpdamimo/omni.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "lpdamimo/error.hpp"
#include "lpdamimo/io.hpp"
#include "lpdamimo/pattern_metrics.hpp"
#include "lpdamimo/units.hpp"

namespace lpdamimo {

namespace {

constexpr double kTieDb = 1e-9;
constexpr double kFloorDb = -300.0;

double wrap360(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    return w >= 360.0 ? 0.0 : w;
}

// Directive-gain evaluator for one pole, reusing the radiated-power integral.
struct PoleGain {
    const FarFieldPattern* pattern = nullptr;
    double azimuth = 0.0;
    double total = 0.0;

    double operator()(double theta, double phi) const {
        const double p = pattern->power_at(theta, wrap360(phi - azimuth));
        const double g = 4.0 * kPi * p / total;
        return g > 0.0 ? std::max(10.0 * std::log10(g), kFloorDb) : kFloorDb;
    }
};

std::array<PoleGain, 4> pole_gains(const OmniSet& set, Band band) {
    std::array<PoleGain, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& assembly = set[k];
        const auto& pattern = assembly.pattern(band);
        if (!pattern)
            fail(ErrorKind::Precondition,
                 fmt::format("pole {} has no {} pattern", pole_letter(assembly.pole), band_name(band)));
        if (k > 0 && !pattern->same_grid(*out[0].pattern))
            fail(ErrorKind::Precondition, fmt::format("{} patterns do not share one grid", band_name(band)));
        const double total = integrated_power(*pattern);
        if (!(total > 0.0))
            fail(ErrorKind::Precondition, fmt::format("pole {} has an all-zero pattern", pole_letter(assembly.pole)));
        out[k] = {&*pattern, pole_azimuth(assembly.pole), total};
    }
    return out;
}

double elevation_to_theta(double elevation) {
    require(elevation >= -90.0 && elevation <= 90.0, "elevation must lie in [-90, 90] degrees");
    return 90.0 - elevation;
}

std::pair<int, double> argmax(const std::array<double, 4>& g) {
    const double best = *std::max_element(g.begin(), g.end());
    for (int k = 0; k < 4; ++k)
        if (g[k] >= best - kTieDb)
            return {k, best};
    return {0, best};
}

} // namespace

char pole_letter(Pole p) {
    static constexpr char letters[] = {'N', 'E', 'S', 'W'};
    return letters[static_cast<int>(p)];
}

Band parse_band(std::string_view text) {
    if (text == "LB" || text == "lb")
        return Band::LB;
    if (text == "HB" || text == "hb")
        return Band::HB;
    fail(ErrorKind::UnknownLabel, fmt::format("unknown band '{}', expected LB or HB", text));
}

const char* band_name(Band band) { return band == Band::LB ? "LB" : "HB"; }

OmniSet::OmniSet(std::vector<PoleAssembly> assemblies) {
    require(assemblies.size() == 4, "an omni set needs exactly four pole assemblies");
    std::array<bool, 4> seen{};
    for (auto& a : assemblies) {
        const auto idx = static_cast<std::size_t>(a.pole);
        require(!seen[idx], fmt::format("pole {} appears more than once", pole_letter(a.pole)));
        seen[idx] = true;
        assemblies_[idx] = std::move(a);
    }
}

FarFieldPattern rotate_pattern(const FarFieldPattern& p, double azimuth) {
    const std::size_t nt = p.theta_count(), np = p.phi_count();
    std::vector<Complex> et(p.size()), ep(p.size());
    const double steps = wrap360(azimuth) / p.phi_step();
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) < 1e-9) {
        const auto shift = static_cast<std::size_t>(rounded) % np;
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < np; ++j) {
                const std::size_t src = p.index(i, (j + np - shift) % np);
                et[p.index(i, j)] = p.e_theta()[src];
                ep[p.index(i, j)] = p.e_phi()[src];
            }
    } else {
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < np; ++j) {
                const auto [a, b] = p.field_at(p.theta_deg(i), wrap360(p.phi_deg(j) - azimuth));
                et[p.index(i, j)] = a;
                ep[p.index(i, j)] = b;
            }
    }
    return FarFieldPattern(p.frequency(), p.theta_step(), p.phi_step(), std::move(et), std::move(ep));
}

CoverageProfile composite_coverage(const OmniSet& set, Band band, double elevation) {
    const auto gains = pole_gains(set, band);
    const double theta = elevation_to_theta(elevation);
    const auto& grid = *gains[0].pattern;

    CoverageProfile prof;
    prof.band = band;
    prof.elevation = elevation;
    const std::size_t np = grid.phi_count();
    prof.azimuth.resize(np);
    prof.best_gain.resize(np);
    prof.best_pole.resize(np);
    prof.pole_gain.resize(np);
    for (std::size_t j = 0; j < np; ++j) {
        const double az = grid.phi_deg(j);
        std::array<double, 4> g;
        for (std::size_t k = 0; k < 4; ++k)
            g[k] = gains[k](theta, az);
        const auto [pole, best] = argmax(g);
        prof.azimuth[j] = az;
        prof.best_gain[j] = best;
        prof.best_pole[j] = pole;
        prof.pole_gain[j] = g;
    }
    const auto [lo, hi] = std::minmax_element(prof.best_gain.begin(), prof.best_gain.end());
    prof.min_gain = *lo;
    prof.max_gain = *hi;
    prof.ripple = prof.max_gain - prof.min_gain;

    prof.crossover_depth = 0.0;
    for (std::size_t j = 0; j < np; ++j) {
        const std::size_t n = (j + 1) % np;
        if (prof.best_pole[j] != prof.best_pole[n])
            prof.crossover_depth =
                std::max(prof.crossover_depth, prof.max_gain - std::min(prof.best_gain[j], prof.best_gain[n]));
    }
    return prof;
}

PoleSelection select_pole(const OmniSet& set, double target_azimuth, Band band, double elevation) {
    const auto gains = pole_gains(set, band);
    const double theta = elevation_to_theta(elevation);
    std::array<double, 4> g;
    for (std::size_t k = 0; k < 4; ++k)
        g[k] = gains[k](theta, wrap360(target_azimuth));
    const auto [pole, best] = argmax(g);
    return {pole, best};
}

std::vector<PoleArc> pole_arcs(const CoverageProfile& prof) {
    const std::size_t n = prof.azimuth.size();
    if (n == 0)
        return {};
    const double step = n > 1 ? prof.azimuth[1] - prof.azimuth[0] : 360.0;

    // Boundary azimuth between sample j and the next one.
    auto boundary = [&](std::size_t j) {
        const std::size_t k = (j + 1) % n;
        const int a = prof.best_pole[j], b = prof.best_pole[k];
        const double az = prof.azimuth[j];
        if (!prof.pole_gain.empty()) {
            if (prof.pole_gain[j][b] >= prof.best_gain[j] - kTieDb)
                return az;
            if (prof.pole_gain[k][a] >= prof.best_gain[k] - kTieDb)
                return az + step;
        }
        return az + 0.5 * step;
    };

    std::vector<std::size_t> changes;
    for (std::size_t j = 0; j < n; ++j)
        if (prof.best_pole[j] != prof.best_pole[(j + 1) % n])
            changes.push_back(j);
    if (changes.empty())
        return {{0.0, 360.0, prof.best_pole[0]}};

    std::vector<PoleArc> arcs;
    for (std::size_t c = 0; c < changes.size(); ++c) {
        const std::size_t from = changes[c], to = changes[(c + 1) % changes.size()];
        PoleArc arc;
        arc.pole = prof.best_pole[(from + 1) % n];
        arc.start = wrap360(boundary(from));
        arc.end = boundary(to);
        while (arc.end <= arc.start)
            arc.end += 360.0;
        arcs.push_back(arc);
    }
    std::sort(arcs.begin(), arcs.end(), [](const PoleArc& x, const PoleArc& y) { return x.start < y.start; });
    return arcs;
}

CoverageReport coverage_report(const OmniSet& set, const std::filesystem::path& out_dir, double elevation) {
    CoverageReport report;
    std::string summary = fmt::format("elevation_deg = {}\n", format_number(elevation));
    for (Band band : {Band::LB, Band::HB}) {
        bool complete = true;
        for (const auto& a : set.assemblies())
            complete = complete && a.pattern(band).has_value();
        if (!complete)
            continue;
        auto prof = composite_coverage(set, band, elevation);
        const std::string name = band_name(band);
        const auto cov = out_dir / fmt::format("coverage_{}.csv", name);
        const auto map = out_dir / fmt::format("pole_map_{}.csv", name);
        write_text_atomic(cov, coverage_csv(prof));
        write_text_atomic(map, pole_map_csv(pole_arcs(prof)));
        report.files.push_back(cov);
        report.files.push_back(map);
        summary += fmt::format("[{}]\nripple_db = {}\ncrossover_depth_db = {}\nmin_best_gain_dbi = {}\n"
                               "max_best_gain_dbi = {}\n",
                               name, format_number(prof.ripple), format_number(prof.crossover_depth),
                               format_number(prof.min_gain), format_number(prof.max_gain));
        report.profiles.push_back(std::move(prof));
    }
    require(!report.profiles.empty(), "no band has patterns for all four poles");
    const auto path = out_dir / "coverage_summary.txt";
    write_text_atomic(path, summary);
    report.files.push_back(path);
    report.summary = std::move(summary);
    return report;
}

} // namespace lpdamimo
