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

#include "lpdamimo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "lpdamimo/error.hpp"
#include "lpdamimo/units.hpp"

namespace lpdamimo {

SubstrateSpec fr4_substrate() { return SubstrateSpec{4.3, 1.6, 0.03, 1.23}; }

BandSpec::BandSpec(double low, double high) : f_low(low), f_high(high) {
    require(std::isfinite(low) && std::isfinite(high) && low > 0.0 && low < high,
            fmt::format("invalid band {}..{} MHz", low, high));
}

namespace {

void check_substrate(const SubstrateSpec& s) {
    require(s.relative_permittivity >= 1.0, "substrate permittivity must be >= 1");
    require(s.thickness > 0.0, "substrate thickness must be positive");
    require(s.loss_tangent >= 0.0, "substrate loss tangent must be non-negative");
    require(s.effective_length_scale >= 1.0, "effective length scale must be >= 1");
}

void check_element(const DipoleElement& e, std::size_t index) {
    require(std::isfinite(e.arm_length) && e.arm_length > 0.0, fmt::format("element {}: arm length must be positive", index));
    require(std::isfinite(e.strip_width) && e.strip_width > 0.0, fmt::format("element {}: strip width must be positive", index));
    require(e.strip_width < e.arm_length, fmt::format("element {}: strip width must be below arm length", index));
    if (e.spacing_to_next)
        require(std::isfinite(*e.spacing_to_next) && *e.spacing_to_next > 0.0,
                fmt::format("element {}: spacing must be positive", index));
}

RatioStats ratio_stats(std::vector<double> values) {
    RatioStats stats;
    if (!values.empty()) {
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        stats.min = *lo;
        stats.max = *hi;
        stats.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    }
    stats.values = std::move(values);
    return stats;
}

} // namespace

LpdaGeometry::LpdaGeometry(std::vector<DipoleElement> elements, SubstrateSpec substrate, double footprint_length,
                           double footprint_width, std::string band_label)
    : elements_(std::move(elements)), substrate_(substrate), footprint_length_(footprint_length),
      footprint_width_(footprint_width), band_label_(std::move(band_label)) {
    require(elements_.size() >= 2, "an LPDA needs at least two elements");
    check_substrate(substrate_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        check_element(elements_[i], i);
        if (i + 1 < elements_.size())
            require(elements_[i].spacing_to_next.has_value(), fmt::format("element {}: missing spacing to next", i));
    }
    require(footprint_length_ > 0.0 && footprint_width_ > 0.0, "footprint dimensions must be positive");
}

std::vector<double> LpdaGeometry::element_positions() const {
    std::vector<double> x(elements_.size(), 0.0);
    for (std::size_t i = 1; i < elements_.size(); ++i)
        x[i] = x[i - 1] + *elements_[i - 1].spacing_to_next;
    return x;
}

double resonant_arm_length(double frequency_mhz, double effective_length_scale) {
    return wavelength_mm(frequency_mhz) / 4.0 / effective_length_scale;
}

LpdaGeometry synthesize(const BandSpec& band, double ratio, double first_spacing, const SubstrateSpec& substrate,
                        double bandwidth_margin, const SynthesisOptions& options) {
    if (!(ratio > kMinRatio && ratio < kMaxRatio))
        fail(ErrorKind::BoundsViolation, fmt::format("ratio {} outside ({}, {})", ratio, kMinRatio, kMaxRatio));
    require(band.f_low > 0.0 && band.f_low < band.f_high, "invalid band");
    require(first_spacing > 0.0, "first spacing must be positive");
    require(bandwidth_margin >= 1.0, "bandwidth margin must be >= 1");
    require(options.width_factor > 0.0 && options.width_factor < 1.0, "width factor must lie in (0, 1)");
    check_substrate(substrate);

    const double largest = resonant_arm_length(band.f_low, substrate.effective_length_scale);
    const double shortest_needed = resonant_arm_length(band.f_high * bandwidth_margin, substrate.effective_length_scale);

    std::vector<double> arms{largest};
    while (arms.back() > shortest_needed || arms.size() < 2) {
        if (arms.size() >= options.max_elements)
            fail(ErrorKind::SynthesisOverflow,
                 fmt::format("more than {} elements needed for ratio {}", options.max_elements, ratio));
        arms.push_back(arms.back() * ratio);
    }

    std::vector<DipoleElement> elements;
    elements.reserve(arms.size());
    double spacing = first_spacing;
    double boom = 0.0;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        DipoleElement e{arms[i], options.width_factor * arms[i], std::nullopt};
        if (i + 1 < arms.size()) {
            e.spacing_to_next = spacing;
            boom += spacing;
            spacing *= ratio;
        }
        elements.push_back(e);
    }
    return LpdaGeometry(std::move(elements), substrate, boom + options.length_margin,
                        2.0 * largest + options.width_margin,
                        fmt::format("{:g}-{:g}MHz", band.f_low, band.f_high));
}

bool ValidationReport::passed() const { return failure_count() == 0; }

std::size_t ValidationReport::failure_count() const {
    return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                  [](const auto& f) { return f.severity == Severity::Failure; }));
}

ValidationReport validate(const LpdaGeometry& geometry, double ratio_tolerance) {
    ValidationReport report;
    const auto elements = geometry.elements();
    const double lo = kMinRatio - ratio_tolerance;
    const double hi = kMaxRatio + ratio_tolerance;

    std::vector<double> length_ratios;
    for (std::size_t i = 1; i < elements.size(); ++i) {
        const double r = elements[i].arm_length / elements[i - 1].arm_length;
        length_ratios.push_back(r);
        if (r >= 1.0)
            report.findings.push_back({"arm-order", Severity::Failure,
                                       fmt::format("arm {} ({} mm) is not shorter than arm {} ({} mm)", i,
                                                   elements[i].arm_length, i - 1, elements[i - 1].arm_length)});
        if (!(r > lo && r < hi))
            report.findings.push_back({"length-ratio", Severity::Failure,
                                       fmt::format("L{}/L{} = {:.6f} outside ({}, {})", i, i - 1, r, kMinRatio, kMaxRatio)});
    }

    // Spacing ratios cover the n-1 inter-element gaps only; a feed offset is excluded.
    std::vector<double> spacing_ratios;
    for (std::size_t i = 1; i + 1 < elements.size(); ++i) {
        const double r = *elements[i].spacing_to_next / *elements[i - 1].spacing_to_next;
        spacing_ratios.push_back(r);
        if (!(r > lo && r < hi))
            report.findings.push_back({"spacing-ratio", Severity::Warning,
                                       fmt::format("d{}/d{} = {:.6f} outside ({}, {})", i, i - 1, r, kMinRatio, kMaxRatio)});
    }

    report.length_ratios = ratio_stats(std::move(length_ratios));
    report.spacing_ratios = ratio_stats(std::move(spacing_ratios));
    report.boom_length = boom_length(geometry);

    double max_arm = 0.0;
    for (const auto& e : elements)
        max_arm = std::max(max_arm, e.arm_length);
    if (geometry.footprint_width() < 2.0 * max_arm)
        report.findings.push_back({"footprint-width", Severity::Failure,
                                   fmt::format("footprint width {} mm below dipole span {} mm", geometry.footprint_width(),
                                               2.0 * max_arm)});
    if (geometry.footprint_length() < report.boom_length)
        report.findings.push_back({"footprint-length", Severity::Failure,
                                   fmt::format("footprint length {} mm below boom length {} mm",
                                               geometry.footprint_length(), report.boom_length)});
    return report;
}

namespace {

LpdaGeometry make_fixture(const std::vector<double>& arms, const std::vector<double>& widths,
                          const std::vector<double>& spacings, double length, double width, std::string label) {
    std::vector<DipoleElement> elements;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        DipoleElement e{arms[i], widths[i], std::nullopt};
        if (i < spacings.size())
            e.spacing_to_next = spacings[i];
        elements.push_back(e);
    }
    return LpdaGeometry(std::move(elements), fr4_substrate(), length, width, std::move(label));
}

} // namespace

LpdaGeometry prototype_fixture(std::string_view band_label) {
    if (band_label == "LB")
        return make_fixture({87, 77, 68, 60, 53, 47}, {16, 14, 12, 11, 10, 9}, {28, 25, 22, 20, 17}, 190, 176, "LB");
    if (band_label == "HB")
        // 14 spacings for 14 elements: the last one is the feed offset.
        return make_fixture({33, 30, 28, 26, 24, 22, 20, 19, 17, 16, 15, 13, 12, 11},
                            {12, 11, 11, 10, 10, 10, 10, 9, 9, 9, 8, 8, 7, 7},
                            {15, 14, 14, 13, 13, 13, 12, 12, 12, 11, 11, 10, 10, 9}, 190, 69, "HB");
    fail(ErrorKind::UnknownLabel, fmt::format("unknown fixture label '{}' (expected LB or HB)", band_label));
}

double boom_length(const LpdaGeometry& geometry) {
    double sum = 0.0;
    for (const auto& e : geometry.elements())
        if (e.spacing_to_next)
            sum += *e.spacing_to_next;
    return sum;
}

} // namespace lpdamimo
