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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpdamimo/far_field_pattern.hpp"
#include "lpdamimo/placement.hpp"

namespace lpdamimo {

enum class Pole { North = 0, East = 1, South = 2, West = 3 };

inline double pole_azimuth(Pole p) { return 90.0 * static_cast<int>(p); }
char pole_letter(Pole p);

enum class Band { LB, HB };

Band parse_band(std::string_view text);
const char* band_name(Band band);

/// One dual-band slant pair mounted facing a pole. A band may be left uncharacterised.
struct PoleAssembly {
    Pole pole = Pole::North;
    std::optional<FarFieldPattern> lb_pattern;
    std::optional<FarFieldPattern> hb_pattern;
    SlantPlacement placement;

    const std::optional<FarFieldPattern>& pattern(Band band) const { return band == Band::LB ? lb_pattern : hb_pattern; }
};

/// Exactly four assemblies facing N, E, S and W, stored in that order. Each pattern is
/// given in the assembly's own frame (boresight toward phi = 0) and is rotated to its
/// pole azimuth when composed.
class OmniSet {
  public:
    explicit OmniSet(std::vector<PoleAssembly> assemblies);

    const std::array<PoleAssembly, 4>& assemblies() const { return assemblies_; }
    const PoleAssembly& operator[](std::size_t i) const { return assemblies_[i]; }

  private:
    std::array<PoleAssembly, 4> assemblies_;
};

/// Rotation about the vertical axis. Grid-aligned angles shift samples exactly; other
/// angles interpolate the complex fields linearly in phi.
FarFieldPattern rotate_pattern(const FarFieldPattern& pattern, double azimuth);

struct CoverageProfile {
    Band band = Band::LB;
    double elevation = 0.0;          // degrees above the horizon
    std::vector<double> azimuth;     // degrees
    std::vector<double> best_gain;   // dBi
    std::vector<int> best_pole;      // 0..3
    std::vector<std::array<double, 4>> pole_gain; // dBi per sample, indexed by pole
    double ripple = 0.0;             // max - min of best_gain, dB
    double crossover_depth = 0.0;    // worst drop below the peak at a pole hand-over, dB
    double min_gain = 0.0;
    double max_gain = 0.0;
};

/// Best-pole envelope around the horizon ring at the given elevation, sampled on the
/// patterns' phi grid. Ties go to the lowest pole index.
CoverageProfile composite_coverage(const OmniSet& set, Band band, double elevation = 0.0);

struct PoleSelection {
    int pole = 0;
    double gain = 0.0; // dBi
};

PoleSelection select_pole(const OmniSet& set, double target_azimuth, Band band, double elevation = 0.0);

struct PoleArc {
    double start = 0.0; // degrees
    double end = 0.0;   // degrees, may wrap past 360
    int pole = 0;
};

/// Contiguous azimuth arcs served by one pole; arcs wrapping through 0 deg are merged.
/// A boundary sits on a sample where both poles tie, otherwise midway between samples.
std::vector<PoleArc> pole_arcs(const CoverageProfile& profile);

struct CoverageReport {
    std::vector<CoverageProfile> profiles;
    std::vector<std::filesystem::path> files;
    std::string summary;
};

/// Writes coverage_<band>.csv and pole_map_<band>.csv for every characterised band plus
/// coverage_summary.txt into out_dir.
CoverageReport coverage_report(const OmniSet& set, const std::filesystem::path& out_dir, double elevation = 0.0);

} // namespace lpdamimo
