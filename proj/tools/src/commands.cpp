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

#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lpdamimo/lpdamimo.hpp"

namespace lpdamimo::cli {

namespace fs = std::filesystem;

namespace {

// Thrown for a geometry that parses but fails validation.
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown after partial results are written when some sweep points were singular.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NumericalSingularity:
        return kExitNumerical;
    default:
        return kExitUsage;
    }
}

struct Sweep3 {
    double start = 0.0, stop = 0.0, step = 0.0;
};

Sweep3 parse_sweep(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::exception&) {
            fail(ErrorKind::Precondition, fmt::format("sweep '{}' must be START:STOP:STEP in MHz", text));
        }
    }
    if (v.size() != 3)
        fail(ErrorKind::Precondition, fmt::format("sweep '{}' must be START:STOP:STEP in MHz", text));
    return {v[0], v[1], v[2]};
}

BandSpec parse_band_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(ErrorKind::Precondition, fmt::format("band '{}' must be LOW:HIGH in MHz", text));
    try {
        return BandSpec(std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorKind::Precondition, fmt::format("band '{}' must be LOW:HIGH in MHz", text));
    }
}

fs::path output_dir(const std::string& flag) {
    fs::path dir = flag;
    if (dir.empty()) {
        const char* env = std::getenv(kOutDirEnv);
        dir = env && *env ? fs::path(env) : fs::path(".");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        fail(ErrorKind::Io, fmt::format("output directory {} is not writable", dir.string()));
    return dir;
}

std::string fixture_default_sweep(const std::string& label) { return label == "HB" ? "1700:2700:25" : "700:900:5"; }

double fixture_center(const std::string& label) { return label == "HB" ? 2400.0 : 800.0; }

void print_validation(const ValidationReport& r, std::ostream& out) {
    out << fmt::format("elements: {}\n", r.length_ratios.values.size() + 1);
    out << fmt::format("length ratio: min {} max {} mean {}\n", format_number(r.length_ratios.min),
                       format_number(r.length_ratios.max), format_number(r.length_ratios.mean));
    out << fmt::format("boom length: {} mm\n", format_number(r.boom_length));
    for (const auto& f : r.findings)
        out << fmt::format("{}: {}: {}\n", f.severity == Severity::Failure ? "FAIL" : "WARN", f.check, f.message);
    out << (r.passed() ? "validation: PASS\n" : "validation: FAIL\n");
}

// ---- synthesize -------------------------------------------------------------

struct SynthesizeArgs {
    std::string band = "700:900";
    double ratio = 0.885;
    double first_spacing = 30.0;
    double margin = 1.0;
    double tolerance = 0.0;
    std::string fixture;
    std::string output = "geometry.json";
};

int cmd_synthesize(const SynthesizeArgs& a, const fs::path& dir, std::ostream& out) {
    const auto geometry = a.fixture.empty()
                              ? synthesize(parse_band_range(a.band), a.ratio, a.first_spacing, fr4_substrate(), a.margin)
                              : prototype_fixture(a.fixture);
    const auto report = validate(geometry, a.tolerance);
    const auto path = dir / a.output;
    save_geometry(path, geometry);
    out << fmt::format("wrote {}\n", path.string());
    out << fmt::format("largest arm: {} mm\n", format_number(geometry[0].arm_length));
    print_validation(report, out);
    if (!report.passed())
        throw ValidationFailure("geometry failed validation");
    return kExitOk;
}

// ---- evaluate ---------------------------------------------------------------

struct EvaluateArgs {
    std::string geometry;
    std::string fixture;
    std::string sweep;
    double z0 = 100.0;
    double reference = 50.0;
    double efficiency = kDefaultEfficiency;
    double pattern_step = 1.0;
    double tilt = 0.0;
    double slant_tilt = 45.0;
    std::vector<double> pattern_at;
    std::string prefix;
};

int cmd_evaluate(const EvaluateArgs& a, const fs::path& dir, std::ostream& out) {
    if (a.geometry.empty() == a.fixture.empty())
        fail(ErrorKind::Precondition, "give exactly one of --geometry or --fixture");
    const auto geometry = a.fixture.empty() ? load_geometry(a.geometry) : prototype_fixture(a.fixture);
    std::string sweep_text = a.sweep;
    if (sweep_text.empty()) {
        if (a.fixture.empty())
            fail(ErrorKind::Precondition, "--sweep is required with --geometry");
        sweep_text = fixture_default_sweep(a.fixture);
    }
    const auto s = parse_sweep(sweep_text);
    const auto sweep = FrequencySweep::linear(s.start, s.stop, s.step);
    const auto dipoles = dipole_array(geometry);
    FeederOptions feeder;
    feeder.z0 = a.z0;
    feeder.feed_offset = geometry.feed_offset();

    std::vector<SweepSample> refl;
    std::vector<MetricsSample> metrics;
    std::vector<double> singular;
    for (double f : sweep.points()) {
        try {
            const auto sol = solve_drive(dipoles, feeder, f);
            const Complex r = s11(sol.input_impedance, a.reference);
            refl.push_back({f, r});
            auto m = compute_metrics(far_field(sol, dipoles, a.pattern_step, a.tilt), r, a.efficiency);
            m.cross_pol_ratio = slant_components(far_field(sol, dipoles, a.pattern_step, a.slant_tilt)).cross_pol_ratio;
            metrics.push_back({f, m});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NumericalSingularity)
                throw;
            singular.push_back(f);
        }
    }
    for (double f : a.pattern_at) {
        const auto sol = solve_drive(dipoles, feeder, f);
        const auto path = dir / fmt::format("{}pattern_{}MHz.csv", a.prefix, format_number(f));
        write_text_atomic(path, pattern_csv(far_field(sol, dipoles, a.pattern_step, a.tilt)));
        out << fmt::format("wrote {}\n", path.string());
    }
    const auto s11_path = dir / (a.prefix + "s11.csv");
    const auto metrics_path = dir / (a.prefix + "metrics.csv");
    write_text_atomic(s11_path, s11_csv(refl));
    write_text_atomic(metrics_path, metrics_csv(metrics));
    out << fmt::format("wrote {}\nwrote {}\n", s11_path.string(), metrics_path.string());

    if (!refl.empty()) {
        const auto worst = std::max_element(refl.begin(), refl.end(), [](const auto& x, const auto& y) {
            return std::abs(x.reflection) < std::abs(y.reflection);
        });
        const auto [gmin, gmax] = std::minmax_element(metrics.begin(), metrics.end(), [](const auto& x, const auto& y) {
            return x.metrics.realized_gain < y.metrics.realized_gain;
        });
        out << fmt::format("{}: worst S11 {} dB at {} MHz; realized gain {} to {} dBi\n",
                           geometry.band_label().empty() ? "geometry" : geometry.band_label(),
                           format_number(magnitude_db(worst->reflection)), format_number(worst->frequency),
                           format_number(gmin->metrics.realized_gain), format_number(gmax->metrics.realized_gain));
    }
    if (!singular.empty()) {
        std::string list;
        for (double f : singular)
            list += (list.empty() ? "" : ", ") + format_number(f);
        throw NumericalFailure(fmt::format("solver singular at {} MHz", list));
    }
    return kExitOk;
}

// ---- optimize ---------------------------------------------------------------

struct OptimizeArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> generations;
    std::optional<std::size_t> population;
    std::optional<std::size_t> threads;
};

void reject_unknown(const Config& cfg, const std::string& section, std::initializer_list<std::string_view> known) {
    const std::vector<std::string_view> list(known);
    const auto extra = cfg.unknown_keys(section, list);
    if (!extra.empty())
        fail(ErrorKind::Config, fmt::format("unknown key [{}].{}", section, extra.front()));
}

GaConfig read_ga(const Config& cfg) {
    cfg.require_section("ga");
    reject_unknown(cfg, "ga",
                   {"objective", "genes", "population", "generations", "crossover_rate", "mutation_rate",
                    "mutation_sigma", "tournament_size", "elite_count", "seed", "termination_error", "threads"});
    GaConfig g;
    g.population = cfg.get_size("ga", "population", g.population);
    g.generations = cfg.get_size("ga", "generations", g.generations);
    g.crossover_rate = cfg.get_double("ga", "crossover_rate", g.crossover_rate);
    g.mutation_rate = cfg.get_double("ga", "mutation_rate", g.mutation_rate);
    g.mutation_sigma = cfg.get_double("ga", "mutation_sigma", g.mutation_sigma);
    g.tournament_size = cfg.get_size("ga", "tournament_size", g.tournament_size);
    g.elite_count = cfg.get_size("ga", "elite_count", g.elite_count);
    g.seed = cfg.get_u64("ga", "seed", g.seed);
    g.termination_error = cfg.get_double("ga", "termination_error", g.termination_error);
    g.threads = cfg.get_size("ga", "threads", g.threads);
    return g;
}

DesignGoals read_goals(const Config& cfg) {
    cfg.require_section("goals");
    reject_unknown(cfg, "goals",
                   {"band", "min_gain", "target_hpbw_h", "max_cross_pol_deficit", "max_length", "max_width",
                    "s11_threshold", "slant_tilt", "efficiency", "reference", "pattern_step", "velocity_factor"});
    DesignGoals g;
    if (const auto band = cfg.raw("goals", "band"))
        g.band = parse_band_range(*band);
    g.min_gain = cfg.get_double("goals", "min_gain", g.min_gain);
    g.target_hpbw_h = cfg.get_double("goals", "target_hpbw_h", g.target_hpbw_h);
    g.max_cross_pol_deficit = cfg.get_double("goals", "max_cross_pol_deficit", g.max_cross_pol_deficit);
    g.max_length = cfg.get_double("goals", "max_length", g.max_length);
    g.max_width = cfg.get_double("goals", "max_width", g.max_width);
    g.s11_threshold = cfg.get_double("goals", "s11_threshold", g.s11_threshold);
    g.slant_tilt = cfg.get_double("goals", "slant_tilt", g.slant_tilt);
    g.efficiency = cfg.get_double("goals", "efficiency", g.efficiency);
    g.reference = cfg.get_double("goals", "reference", g.reference);
    g.pattern_step = cfg.get_double("goals", "pattern_step", g.pattern_step);
    g.velocity_factor = cfg.get_double("goals", "velocity_factor", g.velocity_factor);
    return g;
}

ErrorWeights read_weights(const Config& cfg) {
    cfg.require_section("weights");
    reject_unknown(cfg, "weights", {"w_f", "w_g", "w_p", "w_d", "w_h"});
    ErrorWeights w;
    w.w_f = cfg.get_double("weights", "w_f", w.w_f);
    w.w_g = cfg.get_double("weights", "w_g", w.w_g);
    w.w_p = cfg.get_double("weights", "w_p", w.w_p);
    w.w_d = cfg.get_double("weights", "w_d", w.w_d);
    w.w_h = cfg.get_double("weights", "w_h", w.w_h);
    return w;
}

GenomeBounds read_bounds(const Config& cfg, const BandSpec& band) {
    auto b = GenomeBounds::for_band(band);
    if (!cfg.has_section("bounds"))
        return b;
    reject_unknown(cfg, "bounds",
                   {"ratio_min", "ratio_max", "first_spacing_min", "first_spacing_max", "element_count_min",
                    "element_count_max", "largest_arm_min", "largest_arm_max", "width_factor_min", "width_factor_max",
                    "feeder_z0_min", "feeder_z0_max"});
    auto range = [&](GeneRange& r, const std::string& name) {
        r.lower = cfg.get_double("bounds", name + "_min", r.lower);
        r.upper = cfg.get_double("bounds", name + "_max", r.upper);
    };
    range(b.ratio, "ratio");
    range(b.first_spacing, "first_spacing");
    range(b.element_count, "element_count");
    range(b.largest_arm, "largest_arm");
    range(b.width_factor, "width_factor");
    range(b.feeder_z0, "feeder_z0");
    return b;
}

FrequencySweep read_sweep(const Config& cfg, const BandSpec& band) {
    if (!cfg.has_section("sweep"))
        return FrequencySweep::linear(band.f_low, band.f_high, (band.f_high - band.f_low) / 10.0);
    reject_unknown(cfg, "sweep", {"start", "stop", "step"});
    const double start = cfg.get_double("sweep", "start", band.f_low);
    const double stop = cfg.get_double("sweep", "stop", band.f_high);
    const double step = cfg.get_double("sweep", "step", (band.f_high - band.f_low) / 10.0);
    return FrequencySweep::linear(start, stop, step);
}

int cmd_optimize(const OptimizeArgs& a, const fs::path& dir, std::ostream& out) {
    const auto cfg = Config::load(a.config);
    auto ga = read_ga(cfg);
    if (a.seed)
        ga.seed = *a.seed;
    if (a.generations)
        ga.generations = *a.generations;
    if (a.population)
        ga.population = *a.population;
    if (a.threads)
        ga.threads = *a.threads;
    const std::string objective = cfg.get_string("ga", "objective", "design");

    GaResult result;
    std::optional<GenomeBounds> bounds;
    if (objective == "sphere") {
        const std::size_t genes = cfg.get_size("ga", "genes", kGenomeGenes);
        result = run_ga(ga, genes, [](std::span<const double> g) { return sphere(g); });
    } else if (objective == "design") {
        const auto goals = read_goals(cfg);
        const auto weights = read_weights(cfg);
        const auto sweep = read_sweep(cfg, goals.band);
        bounds = read_bounds(cfg, goals.band);
        const auto run = run_design(ga, goals, weights, sweep, *bounds);
        result = run.ga;
        const auto report = design_report(run.best, goals, weights, sweep, dir);
        for (const auto& f : report.files)
            out << fmt::format("wrote {}\n", f.string());
        const auto& e = report.evaluation.error;
        out << fmt::format("best genome: ratio {} first_spacing {} mm n {} largest_arm {} mm width_factor {} z0 {} ohm\n",
                           format_number(run.best.ratio), format_number(run.best.first_spacing),
                           run.best.element_count, format_number(run.best.largest_arm),
                           format_number(run.best.width_factor), format_number(run.best.feeder_z0));
        out << fmt::format("errors: e_f {} e_g {} e_p {} e_d {} e_h {} e_t {}\n", format_number(e.e_f),
                           format_number(e.e_g), format_number(e.e_p), format_number(e.e_d), format_number(e.e_h),
                           format_number(e.e_t));
    } else {
        fail(ErrorKind::Config, fmt::format("[ga].objective: unknown objective '{}'", objective));
    }

    std::string history;
    if (bounds) {
        history = history_csv(result, *bounds);
    } else {
        CsvTable t({"generation", "best_et", "mean_et", "best_ratio", "best_n"});
        for (const auto& h : result.history)
            t.add_row({std::to_string(h.generation), format_number(h.best), format_number(h.mean), "nan", "nan"});
        history = t.str();
    }
    const auto path = dir / "history.csv";
    write_text_atomic(path, history);
    out << fmt::format("wrote {}\n", path.string());
    out << fmt::format("generations run: {}; best e_t {}; stop: {}\n", result.history.size(),
                       format_number(result.best_fitness), to_string(result.reason));
    return kExitOk;
}

// ---- placement --------------------------------------------------------------

struct PlacementArgs {
    double width = 0.0;
    std::optional<double> alpha;
    double min_height = 0.0;
    double min_spread = 0.0;
    std::string sweep = "0:180:1";
    std::string convention = "printed";
    std::string output = "tradeoff.csv";
};

int cmd_placement(const PlacementArgs& a, const fs::path& dir, std::ostream& out) {
    require(a.width > 0.0, "--width must be positive");
    const auto conv = parse_plf_convention(a.convention);
    if (a.alpha) {
        const auto p = placement_dims(a.width, *a.alpha, conv);
        out << fmt::format("alpha = {} deg: H = {} mm, S = {} mm, PLF = {} ({} dB)\n", format_number(*a.alpha),
                           format_number(p.height), format_number(p.spread), format_number(p.plf_linear),
                           format_number(p.plf_db));
    }
    const auto s = parse_sweep(a.sweep);
    const auto rows = tradeoff_sweep(a.width, s.start, s.stop, s.step, conv);
    const auto path = dir / a.output;
    write_text_atomic(path, tradeoff_csv(rows));
    out << fmt::format("wrote {}\n", path.string());

    const auto interval = feasible_angles(a.width, {a.min_height, a.min_spread});
    if (!interval)
        out << "feasible incline angles: EMPTY\n";
    else
        out << fmt::format("feasible incline angles: {}{:.1f}, {:.1f}] deg\n", interval->lower_open ? "(" : "[",
                           interval->lower, interval->upper);
    return kExitOk;
}

// ---- omni -------------------------------------------------------------------

struct OmniArgs {
    std::vector<std::string> inputs;
    std::string band = "LB";
    double elevation = 0.0;
    std::optional<double> frequency;
    double pattern_step = 1.0;
    double tilt = 0.0;
    double z0 = 100.0;
    double incline = 45.0;
};

FarFieldPattern load_pattern(const std::string& input, double frequency, const OmniArgs& a) {
    const fs::path p = input;
    if (p.extension() == ".csv")
        return parse_pattern_csv(read_text(p), frequency);
    const auto geometry = (input == "LB" || input == "HB") ? prototype_fixture(input) : load_geometry(p);
    const auto dipoles = dipole_array(geometry);
    FeederOptions feeder;
    feeder.z0 = a.z0;
    feeder.feed_offset = geometry.feed_offset();
    return far_field(solve_drive(dipoles, feeder, frequency), dipoles, a.pattern_step, a.tilt);
}

int cmd_omni(const OmniArgs& a, const fs::path& dir, std::ostream& out) {
    if (a.inputs.size() != 4)
        fail(ErrorKind::Precondition, fmt::format("omni needs exactly four inputs, got {}", a.inputs.size()));
    const Band band = parse_band(a.band);
    const double f = a.frequency.value_or(fixture_center(band_name(band)));
    std::vector<PoleAssembly> set;
    for (std::size_t k = 0; k < 4; ++k) {
        PoleAssembly pa;
        pa.pole = static_cast<Pole>(k);
        auto pattern = load_pattern(a.inputs[k], f, a);
        const auto width = (a.inputs[k] == "LB" || a.inputs[k] == "HB") ? prototype_fixture(a.inputs[k]).footprint_width()
                           : fs::path(a.inputs[k]).extension() == ".json"
                               ? load_geometry(a.inputs[k]).footprint_width()
                               : 0.0;
        if (width > 0.0)
            pa.placement = placement_dims(width, a.incline);
        (band == Band::LB ? pa.lb_pattern : pa.hb_pattern) = std::move(pattern);
        set.push_back(std::move(pa));
    }
    const auto report = coverage_report(OmniSet(std::move(set)), dir, a.elevation);
    for (const auto& file : report.files)
        out << fmt::format("wrote {}\n", file.string());
    const auto& prof = report.profiles.front();
    out << fmt::format("{} ripple {} dB; crossover depth {} dB; min best gain {} dBi\n", band_name(band),
                       format_number(prof.ripple), format_number(prof.crossover_depth), format_number(prof.min_gain));
    return kExitOk;
}

// ---- export -----------------------------------------------------------------

struct ExportArgs {
    std::string fixture;
    std::string geometry;
    std::vector<double> frequencies;
    double pattern_step = 1.0;
    double tilt = 0.0;
    double z0 = 100.0;
    std::string output;
};

int cmd_export(const ExportArgs& a, const fs::path& dir, std::ostream& out) {
    if (a.geometry.empty() == a.fixture.empty())
        fail(ErrorKind::Precondition, "give exactly one of --geometry or --fixture");
    const auto geometry = a.fixture.empty() ? load_geometry(a.geometry) : prototype_fixture(a.fixture);
    const std::string stem = a.fixture.empty() ? fs::path(a.geometry).stem().string() : "prototype_" + a.fixture;
    const auto json_path = dir / (a.output.empty() ? stem + ".json" : a.output);
    save_geometry(json_path, geometry);
    out << fmt::format("wrote {}\n", json_path.string());
    const auto dipoles = dipole_array(geometry);
    FeederOptions feeder;
    feeder.z0 = a.z0;
    feeder.feed_offset = geometry.feed_offset();
    for (double f : a.frequencies) {
        const auto pattern = far_field(solve_drive(dipoles, feeder, f), dipoles, a.pattern_step, a.tilt);
        const auto path = dir / fmt::format("{}_pattern_{}MHz.csv", stem, format_number(f));
        write_text_atomic(path, pattern_csv(pattern));
        out << fmt::format("wrote {}\n", path.string());
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Log-periodic slant-polarized MIMO antenna design toolkit", "lpdamimo"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_dir;
    app.add_option("-o,--out-dir", out_dir,
                   fmt::format("Output directory (default: ${} or the current directory)", kOutDirEnv));

    SynthesizeArgs syn;
    auto* c_syn = app.add_subcommand("synthesize", "Design a ratio-law LPDA or emit a bundled prototype");
    c_syn->add_option("--band", syn.band, "LOW:HIGH in MHz")->capture_default_str();
    c_syn->add_option("--ratio", syn.ratio, "Geometric ratio in (0.78, 0.98)")->capture_default_str();
    c_syn->add_option("--first-spacing", syn.first_spacing, "Spacing after the largest element, mm")
        ->capture_default_str();
    c_syn->add_option("--margin", syn.margin, "Bandwidth margin applied to the upper band edge")->capture_default_str();
    c_syn->add_option("--tolerance", syn.tolerance, "Ratio tolerance used by validation")->capture_default_str();
    c_syn->add_option("--fixture", syn.fixture, "Bundled prototype: LB or HB");
    c_syn->add_option("--output", syn.output, "Geometry JSON file name")->capture_default_str();

    EvaluateArgs ev;
    auto* c_ev = app.add_subcommand("evaluate", "Sweep S11 and pattern metrics of a geometry");
    c_ev->add_option("--geometry", ev.geometry, "Geometry JSON file")->check(CLI::ExistingFile);
    c_ev->add_option("--fixture", ev.fixture, "Bundled prototype: LB or HB");
    c_ev->add_option("--sweep", ev.sweep, "START:STOP:STEP in MHz");
    c_ev->add_option("--z0", ev.z0, "Feeder characteristic impedance, ohms")->capture_default_str();
    c_ev->add_option("--reference", ev.reference, "Reference impedance, ohms")->capture_default_str();
    c_ev->add_option("--efficiency", ev.efficiency, "Radiation efficiency")->capture_default_str();
    c_ev->add_option("--pattern-step", ev.pattern_step, "Angular grid step, degrees")->capture_default_str();
    c_ev->add_option("--tilt", ev.tilt, "Element tilt about the boom, degrees")->capture_default_str();
    c_ev->add_option("--slant-tilt", ev.slant_tilt, "Element tilt used for the cross-polar ratio, degrees")
        ->capture_default_str();
    c_ev->add_option("--pattern-at", ev.pattern_at, "Also write the far field at these frequencies, MHz");
    c_ev->add_option("--prefix", ev.prefix, "Prefix for output file names");

    OptimizeArgs op;
    auto* c_op = app.add_subcommand("optimize", "Run the genetic design loop from a config file");
    c_op->add_option("config", op.config, "Config file")->required()->check(CLI::ExistingFile);
    c_op->add_option("--seed", op.seed, "Overrides [ga].seed");
    c_op->add_option("--generations", op.generations, "Overrides [ga].generations");
    c_op->add_option("--population", op.population, "Overrides [ga].population");
    c_op->add_option("--threads", op.threads, "Overrides [ga].threads");

    PlacementArgs pl;
    auto* c_pl = app.add_subcommand("placement", "Slant pair height, spread and polarization loss");
    c_pl->add_option("--width", pl.width, "Assembly width W, mm")->required();
    c_pl->add_option("--alpha", pl.alpha, "Report dimensions at this incline angle, degrees");
    c_pl->add_option("--min-height", pl.min_height, "Minimum height H, mm")->capture_default_str();
    c_pl->add_option("--min-spread", pl.min_spread, "Minimum spread S, mm")->capture_default_str();
    c_pl->add_option("--sweep", pl.sweep, "START:STOP:STEP in degrees")->capture_default_str();
    c_pl->add_option("--convention", pl.convention, "printed or recentered")->capture_default_str();
    c_pl->add_option("--output", pl.output, "Trade-off CSV file name")->capture_default_str();

    OmniArgs om;
    auto* c_om = app.add_subcommand("omni", "Compose four pole assemblies into omni coverage");
    c_om->add_option("--input", om.inputs, "Geometry JSON, pattern CSV or LB/HB, once per pole in N E S W order")
        ->required();
    c_om->add_option("--band", om.band, "LB or HB")->capture_default_str();
    c_om->add_option("--elevation", om.elevation, "Elevation of the coverage cut, degrees")->capture_default_str();
    c_om->add_option("--frequency", om.frequency, "Frequency for geometry inputs, MHz (default 800 or 2400)");
    c_om->add_option("--pattern-step", om.pattern_step, "Angular grid step, degrees")->capture_default_str();
    c_om->add_option("--tilt", om.tilt, "Element tilt about the boom, degrees")->capture_default_str();
    c_om->add_option("--z0", om.z0, "Feeder characteristic impedance, ohms")->capture_default_str();
    c_om->add_option("--incline", om.incline, "Incline angle of each slant pair, degrees")->capture_default_str();

    ExportArgs ex;
    auto* c_ex = app.add_subcommand("export", "Write geometry JSON and far-field CSV files");
    c_ex->add_option("--fixture", ex.fixture, "Bundled prototype: LB or HB");
    c_ex->add_option("--geometry", ex.geometry, "Geometry JSON file")->check(CLI::ExistingFile);
    c_ex->add_option("--frequency", ex.frequencies, "Far-field frequencies, MHz");
    c_ex->add_option("--pattern-step", ex.pattern_step, "Angular grid step, degrees")->capture_default_str();
    c_ex->add_option("--tilt", ex.tilt, "Element tilt about the boom, degrees")->capture_default_str();
    c_ex->add_option("--z0", ex.z0, "Feeder characteristic impedance, ohms")->capture_default_str();
    c_ex->add_option("--output", ex.output, "Geometry JSON file name");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const auto dir = output_dir(out_dir);
        if (c_syn->parsed())
            return cmd_synthesize(syn, dir, out);
        if (c_ev->parsed())
            return cmd_evaluate(ev, dir, out);
        if (c_op->parsed())
            return cmd_optimize(op, dir, out);
        if (c_pl->parsed())
            return cmd_placement(pl, dir, out);
        if (c_om->parsed())
            return cmd_omni(om, dir, out);
        if (c_ex->parsed())
            return cmd_export(ex, dir, out);
    } catch (const ValidationFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace lpdamimo::cli
