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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpdamimo/em_surrogate.hpp"
#include "lpdamimo/geometry.hpp"
#include "lpdamimo/io.hpp"
#include "lpdamimo/pattern_metrics.hpp"

namespace lpdamimo {

// ---- design goals and the weighted error ----------------------------------

struct DesignGoals {
    BandSpec band{700.0, 900.0};
    double min_gain = 6.0;               // dBi
    double target_hpbw_h = 90.0;         // degrees
    double max_cross_pol_deficit = 20.0; // dB
    double max_length = 190.0;           // mm
    double max_width = 176.0;            // mm
    double s11_threshold = -10.0;        // dB
    double slant_tilt = 45.0;            // degrees, used for the cross-polar check
    double efficiency = kDefaultEfficiency;
    double reference = 50.0;             // ohms
    double pattern_step = 5.0;           // degrees
    double velocity_factor = 1.0;

    void validate() const;
};

struct ErrorWeights {
    double w_f = 1.0;
    double w_g = 1.0;
    double w_p = 1.0;
    double w_d = 1.0;
    double w_h = 1.0;

    void validate() const;
};

struct DesignError {
    double e_f = 0.0; // operating band
    double e_g = 0.0; // gain
    double e_p = 0.0; // polarisation
    double e_d = 0.0; // dimensions
    double e_h = 0.0; // H-plane beamwidth
    double e_t = 0.0; // weighted total
};

/// w_f e_f + w_g e_g + w_p e_p + w_d e_d + w_h e_h, summed in that order.
double combine(const DesignError& error, const ErrorWeights& weights);

// ---- genome ----------------------------------------------------------------

/// Ratio-law parameterisation of an LPDA.
struct Genome {
    double ratio = 0.885;
    double first_spacing = 30.0; // mm
    std::size_t element_count = 9;
    double largest_arm = 87.0; // mm
    double width_factor = 0.184;
    double feeder_z0 = 100.0; // ohms
};

inline constexpr std::size_t kGenomeGenes = 6;

struct GeneRange {
    double lower = 0.0;
    double upper = 1.0;
};

struct GenomeBounds {
    GeneRange ratio{0.781, 0.979};
    GeneRange first_spacing{10.0, 80.0};
    GeneRange element_count{4.0, 16.0};
    GeneRange largest_arm{60.0, 120.0};
    GeneRange width_factor{0.05, 0.3};
    GeneRange feeder_z0{50.0, 200.0};

    /// Ranges scaled to the band: arms around the quarter-wave at the low edge, spacings
    /// between 2 % and 20 % of the low-edge wavelength.
    static GenomeBounds for_band(const BandSpec& band, const SubstrateSpec& substrate = fr4_substrate());
    void validate() const;
};

/// Maps genes in [0, 1] onto the bounds; the element count is rounded to the nearest integer.
Genome decode(std::span<const double> genes, const GenomeBounds& bounds);
std::array<double, kGenomeGenes> encode(const Genome& genome, const GenomeBounds& bounds);

/// Element i has arm largest_arm * ratio^i, strip width width_factor * arm and spacing
/// first_spacing * ratio^i to element i + 1.
LpdaGeometry to_geometry(const Genome& genome, const SubstrateSpec& substrate = fr4_substrate(),
                         const SynthesisOptions& options = {});

/// Closest ratio-law description of an existing geometry (mean ratio, first spacing,
/// largest arm, first width factor).
Genome genome_from_geometry(const LpdaGeometry& geometry, double feeder_z0);

// ---- evaluation -------------------------------------------------------------

struct Evaluation {
    DesignError error;
    std::vector<SweepSample> reflection;     // solvable sweep points
    std::vector<MetricsSample> metrics;      // solvable in-band points
    std::optional<PatternMetrics> center;    // band centre, untilted
    std::optional<double> center_cross_pol;  // dB, slant-tilted
    std::vector<double> singular_frequencies;
};

/// Runs the surrogate over the sweep; a singular point contributes the full per-point
/// penalty instead of aborting.
Evaluation evaluate_geometry(const LpdaGeometry& geometry, double feeder_z0, const DesignGoals& goals,
                             const ErrorWeights& weights, const FrequencySweep& sweep);

DesignError evaluate_error(const Genome& genome, const DesignGoals& goals, const ErrorWeights& weights,
                           const FrequencySweep& sweep, const SubstrateSpec& substrate = fr4_substrate());

// ---- genetic algorithm ------------------------------------------------------

struct GaConfig {
    std::size_t population = 48;
    std::size_t generations = 120;
    double crossover_rate = 0.9;
    double mutation_rate = 0.15;
    double mutation_sigma = 0.05; // in normalised gene units
    std::size_t tournament_size = 3;
    std::size_t elite_count = 2;
    std::uint64_t seed = 0;
    double termination_error = 0.05; // +inf disables early termination
    std::size_t threads = 1;

    void validate() const;
};

enum class Termination { GenerationsExhausted, ErrorThreshold };
const char* to_string(Termination reason);

struct GaGeneration {
    std::size_t generation = 0;
    double best = 0.0;
    double mean = 0.0;
    std::vector<double> best_genes;
};

struct GaResult {
    std::vector<double> best_genes;
    double best_fitness = 0.0;
    std::vector<GaGeneration> history;
    Termination reason = Termination::GenerationsExhausted;
};

/// Minimises fitness over genes in [0, 1]. NaN fitness ranks as +inf.
using Fitness = std::function<double(std::span<const double>)>;

/// Tournament selection, uniform crossover, clamped Gaussian mutation and elitism.
/// Each individual draws from its own stream derived from (seed, generation, index), so
/// the result does not depend on the thread count.
GaResult run_ga(const GaConfig& config, std::size_t gene_count, const Fitness& fitness);

/// Sum of (g - 0.5)^2 over the genes.
double sphere(std::span<const double> genes);

struct DesignRun {
    GaResult ga;
    GenomeBounds bounds;
    Genome best;
    DesignError best_error;
};

DesignRun run_design(const GaConfig& config, const DesignGoals& goals, const ErrorWeights& weights,
                     const FrequencySweep& sweep, const GenomeBounds& bounds,
                     const SubstrateSpec& substrate = fr4_substrate());

/// generation,best_et,mean_et,best_ratio,best_n
std::string history_csv(const GaResult& result, const GenomeBounds& bounds);

// ---- report -----------------------------------------------------------------

struct DesignReport {
    LpdaGeometry geometry;
    Evaluation evaluation;
    std::vector<std::filesystem::path> files;
};

/// component,error,weight,contribution rows followed by the total.
std::string error_breakdown_csv(const DesignError& error, const ErrorWeights& weights);

/// Writes geometry.json, s11.csv, metrics.csv and error_breakdown.csv into out_dir.
DesignReport design_report(const Genome& best, const DesignGoals& goals, const ErrorWeights& weights,
                           const FrequencySweep& sweep, const std::filesystem::path& out_dir,
                           const SubstrateSpec& substrate = fr4_substrate());

} // namespace lpdamimo
