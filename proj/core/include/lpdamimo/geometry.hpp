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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpdamimo {

/// Allowed open interval for the log-periodic geometric ratio.
inline constexpr double kMinRatio = 0.78;
inline constexpr double kMaxRatio = 0.98;

/// One printed dipole of the array. arm_length is a single arm; the dipole spans 2 * arm_length.
struct DipoleElement {
    double arm_length = 0.0;                // mm
    double strip_width = 0.0;               // mm
    std::optional<double> spacing_to_next;  // mm

    bool operator==(const DipoleElement&) const = default;
};

struct SubstrateSpec {
    double relative_permittivity = 4.3;
    double thickness = 1.6;              // mm
    double loss_tangent = 0.03;
    double effective_length_scale = 1.23;

    bool operator==(const SubstrateSpec&) const = default;
};

/// FR-4 as used for the bundled fixtures.
SubstrateSpec fr4_substrate();

struct BandSpec {
    double f_low = 0.0;  // MHz
    double f_high = 0.0; // MHz

    BandSpec() = default;
    BandSpec(double low, double high);

    double center() const { return 0.5 * (f_low + f_high); }
    bool contains(double f) const { return f >= f_low && f <= f_high; }
    bool operator==(const BandSpec&) const = default;
};

/// Printed log-periodic dipole array, largest element first.
///
/// Construction enforces the structural invariants only (element count, positive
/// dimensions, spacings between consecutive elements). The log-periodic ratio law and
/// footprint relations are checked by validate(), so that non-conforming geometries can
/// still be loaded and reported on.
///
/// Every element but the last must carry spacing_to_next. If the last element also has
/// one, it is a feed offset between the smallest element and the source terminals.
class LpdaGeometry {
  public:
    LpdaGeometry(std::vector<DipoleElement> elements, SubstrateSpec substrate, double footprint_length,
                 double footprint_width, std::string band_label = {});

    std::span<const DipoleElement> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const DipoleElement& operator[](std::size_t i) const { return elements_[i]; }
    const SubstrateSpec& substrate() const { return substrate_; }
    double footprint_length() const { return footprint_length_; }
    double footprint_width() const { return footprint_width_; }
    const std::string& band_label() const { return band_label_; }

    /// Boom coordinate of each element, largest at 0 and increasing toward the small end.
    std::vector<double> element_positions() const;

    /// Trailing spacing stored on the last element, if any.
    std::optional<double> feed_offset() const { return elements_.back().spacing_to_next; }

    bool operator==(const LpdaGeometry&) const = default;

  private:
    std::vector<DipoleElement> elements_;
    SubstrateSpec substrate_;
    double footprint_length_;
    double footprint_width_;
    std::string band_label_;
};

struct SynthesisOptions {
    double width_factor = 0.184;     // strip width / arm length
    double width_margin = 2.0;       // mm added to 2 * largest arm
    double length_margin = 20.0;     // mm added to the boom length
    std::size_t max_elements = 64;
};

/// Designs a ratio-law LPDA whose largest arm resonates at band.f_low and whose shortest
/// arm resonates at or above band.f_high * bandwidth_margin.
LpdaGeometry synthesize(const BandSpec& band, double ratio, double first_spacing, const SubstrateSpec& substrate,
                        double bandwidth_margin = 1.0, const SynthesisOptions& options = {});

/// Arm length (mm) of an element resonating as a half-wave dipole at frequency_mhz.
double resonant_arm_length(double frequency_mhz, double effective_length_scale);

enum class Severity { Warning, Failure };

struct ValidationFinding {
    std::string check;
    Severity severity = Severity::Failure;
    std::string message;
};

struct RatioStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::vector<double> values;
};

struct ValidationReport {
    RatioStats length_ratios;
    RatioStats spacing_ratios;
    double boom_length = 0.0;
    std::vector<ValidationFinding> findings;

    /// True when no finding has Failure severity.
    bool passed() const;
    std::size_t failure_count() const;
};

/// Checks the ratio law and footprint relations. Length ratios outside
/// (kMinRatio - tol, kMaxRatio + tol) and footprint violations are failures; spacing
/// ratios outside the same window are warnings, since printed spacings are rounded to
/// whole millimeters.
ValidationReport validate(const LpdaGeometry& geometry, double ratio_tolerance);

/// Fabricated low-band ("LB") and high-band ("HB") prototype dimensions on FR-4.
LpdaGeometry prototype_fixture(std::string_view band_label);

/// Sum of every spacing_to_next, including a trailing feed offset.
double boom_length(const LpdaGeometry& geometry);

} // namespace lpdamimo
