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

#include "lpdamimo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "lpdamimo/error.hpp"
#include "lpdamimo/units.hpp"

namespace lpdamimo {

namespace {

constexpr double kBandEdgeTol = 1e-9;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

bool finite_all(std::initializer_list<double> values) {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

bool in_band(const BandSpec& band, double f) {
    return f >= band.f_low - kBandEdgeTol && f <= band.f_high + kBandEdgeTol;
}

double from_unit(double g, const GeneRange& r) { return r.lower + std::clamp(g, 0.0, 1.0) * (r.upper - r.lower); }

double to_unit(double v, const GeneRange& r) {
    return r.upper > r.lower ? std::clamp((v - r.lower) / (r.upper - r.lower), 0.0, 1.0) : 0.0;
}

void check_range(const GeneRange& r, const char* name, double lo_limit, double hi_limit) {
    if (!(r.lower >= lo_limit && r.upper <= hi_limit && r.lower <= r.upper))
        fail(ErrorKind::Precondition,
             fmt::format("{} range [{}, {}] must lie within [{}, {}]", name, r.lower, r.upper, lo_limit, hi_limit));
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t generation, std::uint64_t index) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s) ^ generation;
    s = a;
    const std::uint64_t b = splitmix64(s) ^ index;
    s = b;
    return splitmix64(s);
}

// Portable draws; std distributions differ between standard libraries.
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

    double normal() {
        if (spare_) {
            const double v = *spare_;
            spare_.reset();
            return v;
        }
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        return r * std::cos(2.0 * kPi * u2);
    }

  private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

double rank_value(double f) { return std::isnan(f) ? std::numeric_limits<double>::infinity() : f; }

void evaluate_population(const std::vector<std::vector<double>>& pop, std::vector<double>& fit,
                         std::vector<bool>& known, const Fitness& fitness, std::size_t threads) {
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
            if (!known[k])
                fit[k] = rank_value(fitness(pop[k]));
    };
    const std::size_t n = pop.size();
    threads = std::clamp<std::size_t>(threads, 1, n);
    if (threads == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk, e = std::min(n, b + chunk);
            if (b < e)
                pool.emplace_back(work, b, e);
        }
        for (auto& th : pool)
            th.join();
    }
    std::fill(known.begin(), known.end(), true);
}

} // namespace

void DesignGoals::validate() const {
    require(finite_all({min_gain, target_hpbw_h, max_cross_pol_deficit, max_length, max_width, s11_threshold,
                        slant_tilt, efficiency, reference, pattern_step, velocity_factor}),
            "design goals must be finite");
    require(band.f_low > 0.0 && band.f_low < band.f_high, "design goals need a valid band");
    require(min_gain > 0.0, "min_gain must be positive");
    require(target_hpbw_h > 0.0, "target_hpbw_h must be positive");
    require(max_cross_pol_deficit > 0.0, "max_cross_pol_deficit must be positive");
    require(max_length > 0.0 && max_width > 0.0, "footprint limits must be positive");
    require(efficiency > 0.0 && efficiency <= 1.0, "efficiency must lie in (0, 1]");
    require(reference > 0.0, "reference impedance must be positive");
    require(pattern_step > 0.0, "pattern_step must be positive");
    require(velocity_factor > 0.0 && velocity_factor <= 1.0, "velocity_factor must lie in (0, 1]");
}

void ErrorWeights::validate() const {
    require(finite_all({w_f, w_g, w_p, w_d, w_h}), "weights must be finite");
    require(w_f >= 0.0 && w_g >= 0.0 && w_p >= 0.0 && w_d >= 0.0 && w_h >= 0.0, "weights must be non-negative");
    require(w_f > 0.0 || w_g > 0.0 || w_p > 0.0 || w_d > 0.0 || w_h > 0.0, "at least one weight must be positive");
}

double combine(const DesignError& e, const ErrorWeights& w) {
    double t = w.w_f * e.e_f;
    t += w.w_g * e.e_g;
    t += w.w_p * e.e_p;
    t += w.w_d * e.e_d;
    t += w.w_h * e.e_h;
    return t;
}

GenomeBounds GenomeBounds::for_band(const BandSpec& band, const SubstrateSpec& substrate) {
    GenomeBounds b;
    const double arm = resonant_arm_length(band.f_low, substrate.effective_length_scale);
    const double lambda = wavelength_mm(band.f_low);
    b.largest_arm = {0.8 * arm, 1.2 * arm};
    b.first_spacing = {0.02 * lambda, 0.2 * lambda};
    return b;
}

void GenomeBounds::validate() const {
    check_range(ratio, "ratio", kMinRatio + 1e-12, kMaxRatio - 1e-12);
    check_range(first_spacing, "first_spacing", 1e-9, std::numeric_limits<double>::max());
    check_range(element_count, "element_count", 4.0, 64.0);
    check_range(largest_arm, "largest_arm", 1e-9, std::numeric_limits<double>::max());
    check_range(width_factor, "width_factor", 1e-9, 1.0 - 1e-9);
    check_range(feeder_z0, "feeder_z0", 1e-9, std::numeric_limits<double>::max());
}

Genome decode(std::span<const double> genes, const GenomeBounds& b) {
    require(genes.size() == kGenomeGenes, fmt::format("a genome has {} genes", kGenomeGenes));
    Genome g;
    g.ratio = from_unit(genes[0], b.ratio);
    g.first_spacing = from_unit(genes[1], b.first_spacing);
    g.element_count = static_cast<std::size_t>(std::lround(from_unit(genes[2], b.element_count)));
    g.largest_arm = from_unit(genes[3], b.largest_arm);
    g.width_factor = from_unit(genes[4], b.width_factor);
    g.feeder_z0 = from_unit(genes[5], b.feeder_z0);
    return g;
}

std::array<double, kGenomeGenes> encode(const Genome& g, const GenomeBounds& b) {
    return {to_unit(g.ratio, b.ratio),
            to_unit(g.first_spacing, b.first_spacing),
            to_unit(static_cast<double>(g.element_count), b.element_count),
            to_unit(g.largest_arm, b.largest_arm),
            to_unit(g.width_factor, b.width_factor),
            to_unit(g.feeder_z0, b.feeder_z0)};
}

LpdaGeometry to_geometry(const Genome& g, const SubstrateSpec& substrate, const SynthesisOptions& options) {
    if (!(g.ratio > kMinRatio && g.ratio < kMaxRatio))
        fail(ErrorKind::BoundsViolation, fmt::format("ratio {} outside ({}, {})", g.ratio, kMinRatio, kMaxRatio));
    require(g.element_count >= 4 && g.element_count <= 64, "element count must lie in [4, 64]");
    require(g.first_spacing > 0.0 && g.largest_arm > 0.0 && g.feeder_z0 > 0.0, "genome values must be positive");
    require(g.width_factor > 0.0 && g.width_factor < 1.0, "width factor must lie in (0, 1)");

    std::vector<DipoleElement> elements;
    double arm = g.largest_arm, spacing = g.first_spacing, boom = 0.0;
    for (std::size_t i = 0; i < g.element_count; ++i) {
        DipoleElement e{arm, g.width_factor * arm, std::nullopt};
        if (i + 1 < g.element_count) {
            e.spacing_to_next = spacing;
            boom += spacing;
        }
        elements.push_back(e);
        arm *= g.ratio;
        spacing *= g.ratio;
    }
    return LpdaGeometry(std::move(elements), substrate, boom + options.length_margin,
                        2.0 * g.largest_arm + options.width_margin, "genome");
}

Genome genome_from_geometry(const LpdaGeometry& geometry, double feeder_z0) {
    const auto els = geometry.elements();
    Genome g;
    const double n = static_cast<double>(els.size());
    g.ratio = std::pow(els.back().arm_length / els.front().arm_length, 1.0 / (n - 1.0));
    g.first_spacing = els.front().spacing_to_next.value_or(0.0);
    g.element_count = els.size();
    g.largest_arm = els.front().arm_length;
    g.width_factor = els.front().strip_width / els.front().arm_length;
    g.feeder_z0 = feeder_z0;
    return g;
}

Evaluation evaluate_geometry(const LpdaGeometry& geometry, double feeder_z0, const DesignGoals& goals,
                             const ErrorWeights& weights, const FrequencySweep& sweep) {
    goals.validate();
    weights.validate();
    require(sweep.front() <= goals.band.f_low + kBandEdgeTol && sweep.back() >= goals.band.f_high - kBandEdgeTol,
            "sweep must cover the goal band");

    const auto dipoles = dipole_array(geometry);
    FeederOptions feeder;
    feeder.z0 = feeder_z0;
    feeder.feed_offset = geometry.feed_offset();
    feeder.velocity_factor = goals.velocity_factor;

    Evaluation ev;
    std::size_t in_band_count = 0, mismatched = 0;
    double gain_penalty = 0.0;
    for (double f : sweep.points()) {
        const bool inside = in_band(goals.band, f);
        in_band_count += inside ? 1 : 0;
        try {
            const auto sol = solve_drive(dipoles, feeder, f);
            const Complex r = s11(sol.input_impedance, goals.reference);
            ev.reflection.push_back({f, r});
            if (!inside)
                continue;
            if (magnitude_db(r) > goals.s11_threshold)
                ++mismatched;
            const auto pattern = far_field(sol, dipoles, goals.pattern_step, 0.0);
            const auto m = compute_metrics(pattern, r, goals.efficiency);
            ev.metrics.push_back({f, m});
            gain_penalty += clamp01(std::max(0.0, (goals.min_gain - m.realized_gain) / goals.min_gain));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NumericalSingularity)
                throw;
            ev.singular_frequencies.push_back(f);
            if (inside) {
                ++mismatched;
                gain_penalty += 1.0;
            }
        }
    }
    require(in_band_count > 0, "sweep has no points inside the goal band");

    DesignError& err = ev.error;
    err.e_f = static_cast<double>(mismatched) / static_cast<double>(in_band_count);
    err.e_g = gain_penalty / static_cast<double>(in_band_count);
    err.e_d = clamp01(std::max(0.0, geometry.footprint_length() / goals.max_length - 1.0) +
                      std::max(0.0, geometry.footprint_width() / goals.max_width - 1.0));

    err.e_p = 1.0;
    err.e_h = 1.0;
    const double fc = goals.band.center();
    try {
        const auto sol = solve_drive(dipoles, feeder, fc);
        const Complex r = s11(sol.input_impedance, goals.reference);
        const auto plain = compute_metrics(far_field(sol, dipoles, goals.pattern_step, 0.0), r, goals.efficiency);
        const auto slant = slant_components(far_field(sol, dipoles, goals.pattern_step, goals.slant_tilt));
        ev.center = plain;
        ev.center_cross_pol = slant.cross_pol_ratio;
        err.e_p = clamp01(
            std::max(0.0, (goals.max_cross_pol_deficit - slant.cross_pol_ratio) / goals.max_cross_pol_deficit));
        if (plain.hpbw_h_plane)
            err.e_h = clamp01(std::abs(*plain.hpbw_h_plane - goals.target_hpbw_h) / goals.target_hpbw_h);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NumericalSingularity)
            throw;
        if (std::find(ev.singular_frequencies.begin(), ev.singular_frequencies.end(), fc) ==
            ev.singular_frequencies.end())
            ev.singular_frequencies.push_back(fc);
    }
    err.e_t = combine(err, weights);
    return ev;
}

DesignError evaluate_error(const Genome& genome, const DesignGoals& goals, const ErrorWeights& weights,
                           const FrequencySweep& sweep, const SubstrateSpec& substrate) {
    return evaluate_geometry(to_geometry(genome, substrate), genome.feeder_z0, goals, weights, sweep).error;
}

void GaConfig::validate() const {
    require(population >= 2, "population must be at least 2");
    require(elite_count < population, "elite_count must be smaller than population");
    require(generations >= 1, "generations must be at least 1");
    require(crossover_rate >= 0.0 && crossover_rate <= 1.0, "crossover_rate must lie in [0, 1]");
    require(mutation_rate >= 0.0 && mutation_rate <= 1.0, "mutation_rate must lie in [0, 1]");
    require(mutation_sigma >= 0.0 && std::isfinite(mutation_sigma), "mutation_sigma must be finite and >= 0");
    require(tournament_size >= 1, "tournament_size must be at least 1");
    require(!std::isnan(termination_error), "termination_error must not be NaN");
}

const char* to_string(Termination reason) {
    return reason == Termination::ErrorThreshold ? "error-threshold" : "generations-exhausted";
}

GaResult run_ga(const GaConfig& cfg, std::size_t gene_count, const Fitness& fitness) {
    cfg.validate();
    require(gene_count >= 1, "at least one gene is required");
    const std::size_t n = cfg.population;

    std::vector<std::vector<double>> pop(n, std::vector<double>(gene_count));
    for (std::size_t k = 0; k < n; ++k) {
        Stream rng(stream_seed(cfg.seed, 0, k));
        for (auto& g : pop[k])
            g = rng.uniform();
    }
    std::vector<double> fit(n, 0.0);
    std::vector<bool> known(n, false);

    GaResult result;
    std::vector<std::size_t> order(n);
    for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
        evaluate_population(pop, fit, known, fitness, cfg.threads);

        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });
        const std::size_t best = order.front();
        double sum = 0.0;
        for (double f : fit)
            sum += f;
        result.history.push_back({gen, fit[best], sum / static_cast<double>(n), pop[best]});
        result.best_genes = pop[best];
        result.best_fitness = fit[best];

        if (std::isfinite(cfg.termination_error) && fit[best] <= cfg.termination_error) {
            result.reason = Termination::ErrorThreshold;
            break;
        }
        if (gen + 1 == cfg.generations)
            break;

        std::vector<std::vector<double>> next(n);
        std::vector<double> next_fit(n, 0.0);
        std::vector<bool> next_known(n, false);
        for (std::size_t e = 0; e < cfg.elite_count; ++e) {
            next[e] = pop[order[e]];
            next_fit[e] = fit[order[e]];
            next_known[e] = true;
        }
        auto tournament = [&](Stream& rng) {
            std::size_t winner = rng.index(n);
            for (std::size_t t = 1; t < cfg.tournament_size; ++t) {
                const std::size_t c = rng.index(n);
                if (fit[c] < fit[winner] || (fit[c] == fit[winner] && c < winner))
                    winner = c;
            }
            return winner;
        };
        for (std::size_t k = cfg.elite_count; k < n; ++k) {
            Stream rng(stream_seed(cfg.seed, gen + 1, k));
            const auto& a = pop[tournament(rng)];
            const auto& b = pop[tournament(rng)];
            std::vector<double> child = a;
            if (rng.uniform() < cfg.crossover_rate)
                for (std::size_t g = 0; g < gene_count; ++g)
                    if (rng.uniform() < 0.5)
                        child[g] = b[g];
            for (auto& g : child)
                if (rng.uniform() < cfg.mutation_rate)
                    g = std::clamp(g + cfg.mutation_sigma * rng.normal(), 0.0, 1.0);
            next[k] = std::move(child);
        }
        pop = std::move(next);
        fit = std::move(next_fit);
        known = std::move(next_known);
    }
    return result;
}

double sphere(std::span<const double> genes) {
    double s = 0.0;
    for (double g : genes)
        s += (g - 0.5) * (g - 0.5);
    return s;
}

DesignRun run_design(const GaConfig& config, const DesignGoals& goals, const ErrorWeights& weights,
                     const FrequencySweep& sweep, const GenomeBounds& bounds, const SubstrateSpec& substrate) {
    goals.validate();
    weights.validate();
    bounds.validate();
    auto fitness = [&](std::span<const double> genes) {
        return evaluate_error(decode(genes, bounds), goals, weights, sweep, substrate).e_t;
    };
    DesignRun run{run_ga(config, kGenomeGenes, fitness), bounds, {}, {}};
    run.best = decode(run.ga.best_genes, bounds);
    run.best_error = evaluate_error(run.best, goals, weights, sweep, substrate);
    return run;
}

std::string history_csv(const GaResult& result, const GenomeBounds& bounds) {
    CsvTable t({"generation", "best_et", "mean_et", "best_ratio", "best_n"});
    for (const auto& h : result.history) {
        std::string ratio = "nan", count = "nan";
        if (h.best_genes.size() == kGenomeGenes) {
            const Genome g = decode(h.best_genes, bounds);
            ratio = format_number(g.ratio);
            count = std::to_string(g.element_count);
        }
        t.add_row({std::to_string(h.generation), format_number(h.best), format_number(h.mean), ratio, count});
    }
    return t.str();
}

std::string error_breakdown_csv(const DesignError& e, const ErrorWeights& w) {
    CsvTable t({"component", "error", "weight", "contribution"});
    const std::array<std::tuple<const char*, double, double>, 5> rows{{{"e_f", e.e_f, w.w_f},
                                                                        {"e_g", e.e_g, w.w_g},
                                                                        {"e_p", e.e_p, w.w_p},
                                                                        {"e_d", e.e_d, w.w_d},
                                                                        {"e_h", e.e_h, w.w_h}}};
    for (const auto& [name, err, weight] : rows)
        t.add_row({name, format_number(err), format_number(weight), format_number(weight * err)});
    t.add_row({"e_t", format_number(e.e_t), "", format_number(e.e_t)});
    return t.str();
}

DesignReport design_report(const Genome& best, const DesignGoals& goals, const ErrorWeights& weights,
                           const FrequencySweep& sweep, const std::filesystem::path& out_dir,
                           const SubstrateSpec& substrate) {
    auto geometry = to_geometry(best, substrate);
    auto ev = evaluate_geometry(geometry, best.feeder_z0, goals, weights, sweep);
    DesignReport report{geometry, ev, {}};
    const std::array<std::pair<const char*, std::string>, 4> files{{
        {"geometry.json", geometry_to_json(geometry)},
        {"s11.csv", s11_csv(ev.reflection)},
        {"metrics.csv", metrics_csv(ev.metrics)},
        {"error_breakdown.csv", error_breakdown_csv(ev.error, weights)},
    }};
    for (const auto& [name, content] : files) {
        const auto path = out_dir / name;
        write_text_atomic(path, content);
        report.files.push_back(path);
    }
    return report;
}

} // namespace lpdamimo
