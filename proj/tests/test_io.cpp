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
#include <limits>

#include <lpdamimo/em_surrogate.hpp>
#include <lpdamimo/io.hpp>
#include <lpdamimo/units.hpp>

#include "test_util.hpp"

using namespace lpdamimo;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("lpdamimo_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string error_message(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(48.79036790) == "48.7903679");
    CHECK(format_number(1e-12) == "1e-12");
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("CSV tables") {
    CsvTable t({"a", "b"});
    t.add_row({"1", "2"}).add_row({"3", "4"});
    CHECK(t.row_count() == 2);
    CHECK(t.str() == "a,b\n1,2\n3,4\n");
    CHECK(error_kind([&] { t.add_row({"5"}); }) == ErrorKind::Precondition);
}

TEST_CASE("CSV headers") {
    CHECK(first_line(s11_csv({})) == "freq_mhz,re_s11,im_s11,mag_db");
    CHECK(first_line(metrics_csv({})) ==
          "freq_mhz,directivity_dbi,realized_gain_dbi,hpbw_e_deg,hpbw_h_deg,ftb_db,xpol_db");
    CHECK(first_line(tradeoff_csv({})) == "alpha_deg,height_mm,spread_mm,plf_linear,plf_db");
    CHECK(first_line(coverage_csv(CoverageProfile{})) == "azimuth_deg,best_gain_dbi,best_pole");
    CHECK(first_line(pole_map_csv({})) == "arc_start_deg,arc_end_deg,pole");
}

TEST_CASE("S11 rows carry the magnitude in dB") {
    const std::vector<SweepSample> s{{800.0, Complex(0.1, -0.2)}};
    const auto text = s11_csv(s);
    const std::string expect = "800,0.1,-0.2," + format_number(10.0 * std::log10(0.05)) + "\n";
    CHECK(text.substr(text.find('\n') + 1) == expect);
}

TEST_CASE("missing beamwidth exports as nan") {
    MetricsSample m{900.0, {}};
    m.metrics.hpbw_e_plane = 60.0;
    const std::vector<MetricsSample> rows{m};
    const auto text = metrics_csv(rows);
    const auto row = text.substr(text.find('\n') + 1);
    CHECK(row.find(",60,nan,") != std::string::npos);
}

TEST_CASE("geometry JSON round trip") {
    for (const char* band : {"LB", "HB"}) {
        const auto g = prototype_fixture(band);
        const auto text = geometry_to_json(g);
        CHECK(geometry_from_json(text) == g);
        CHECK(geometry_to_json(geometry_from_json(text)) == text);
        CHECK(text.find("\"band_label\"") < text.find("\"elements\""));
    }
    auto syn = synthesize(BandSpec(1700, 2700), 0.885, 12.3456789012345, fr4_substrate());
    CHECK(geometry_from_json(geometry_to_json(syn)) == syn);
}

TEST_CASE("bundled resources match the built-in fixtures") {
    const fs::path dir = LPDAMIMO_TEST_RESOURCES;
    CHECK(load_geometry(dir / "prototype_lb.json") == prototype_fixture("LB"));
    CHECK(load_geometry(dir / "prototype_hb.json") == prototype_fixture("HB"));
}

TEST_CASE("malformed JSON reports line and column") {
    const std::string text = "{\n  \"band_label\": \"LB\",\n  \"elements\": [ 1, ]\n}\n";
    CHECK(error_kind([&] { geometry_from_json(text); }) == ErrorKind::Parse);
    const auto msg = error_message([&] { geometry_from_json(text); });
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
    CHECK(error_kind([] { geometry_from_json("{\"elements\": []}"); }).has_value());
    CHECK(error_kind([] { load_geometry("/nonexistent/geometry.json"); }) == ErrorKind::Io);
}

TEST_CASE("pattern CSV round trip") {
    const auto geo = prototype_fixture("HB");
    const auto p = far_field(solve_drive(geo, 2400.0), geo, 10.0, 45.0);
    const auto q = parse_pattern_csv(pattern_csv(p), 2400.0);
    REQUIRE(q.same_grid(p));
    for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(std::abs(q.e_theta()[k] - p.e_theta()[k]) <= 1e-8 * (1 + std::abs(p.e_theta()[k])));
        CHECK(std::abs(q.e_phi()[k] - p.e_phi()[k]) <= 1e-8 * (1 + std::abs(p.e_phi()[k])));
    }
    CHECK(error_kind([] { parse_pattern_csv("theta,phi\n", 800); }) == ErrorKind::Parse);
    CHECK(error_kind([] {
              parse_pattern_csv("theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi\n0,0,1,0\n", 800);
          }) == ErrorKind::Parse);
}

TEST_CASE("atomic writes leave no temporary behind") {
    const auto dir = scratch("atomic");
    const auto path = dir / "nested" / "out.txt";
    write_text_atomic(path, "first\n");
    write_text_atomic(path, "second\n");
    CHECK(read_text(path) == "second\n");
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(path.parent_path())) {
        ++files;
        CHECK(e.path().extension() != ".tmp");
    }
    CHECK(files == 1);
}

TEST_CASE("config documents") {
    const auto cfg = Config::parse(R"(# comment
[ga]
population = 40   # trailing
termination_error = inf
objective = "sphere # not a comment"

[goals]
min_gain = -3.5e0
)");
    CHECK(cfg.has_section("ga"));
    CHECK(cfg.get_size("ga", "population", 0) == 40);
    CHECK(std::isinf(cfg.get_double("ga", "termination_error", 0)));
    CHECK(cfg.get_string("ga", "objective", "") == "sphere # not a comment");
    CHECK(cfg.get_double("goals", "min_gain", 0) == -3.5);
    CHECK(cfg.get_double("goals", "absent", 7.0) == 7.0);
    CHECK(cfg.get_u64("ga", "seed", 11) == 11);
    const std::array<std::string_view, 2> known{"population", "objective"};
    CHECK(cfg.unknown_keys("ga", known) == std::vector<std::string>{"termination_error"});
    CHECK(error_kind([&] { cfg.require_section("weights"); }) == ErrorKind::Config);
    CHECK(error_message([&] { cfg.require_section("weights"); }).find("[weights]") != std::string::npos);
}

TEST_CASE("config errors") {
    CHECK(error_kind([] { Config::parse("key = 1\n"); }) == ErrorKind::Parse);
    CHECK(error_kind([] { Config::parse("[ga\n"); }) == ErrorKind::Parse);
    CHECK(error_kind([] { Config::parse("[ga]\njust words\n"); }) == ErrorKind::Parse);
    CHECK(error_kind([] { Config::parse("[ga]\nname = \"open\n"); }) == ErrorKind::Parse);
    const auto cfg = Config::parse("[ga]\nx = abc\nn = -3\n");
    CHECK(error_kind([&] { cfg.get_double("ga", "x", 0); }) == ErrorKind::Config);
    CHECK(error_kind([&] { cfg.get_u64("ga", "n", 0); }) == ErrorKind::Config);
    CHECK(error_kind([&] { cfg.get_size("ga", "x", 0); }) == ErrorKind::Config);
}

TEST_CASE("shipped configs parse") {
    const fs::path dir = LPDAMIMO_TEST_CONFIGS;
    for (const char* name : {"sphere.toml", "lb_design.toml"}) {
        const auto cfg = Config::load(dir / name);
        CHECK(cfg.has_section("ga"));
    }
}
