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

#include "lpdamimo/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "lpdamimo/error.hpp"

namespace lpdamimo {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s == "inf" || s == "+inf" || s == "infinity")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf" || s == "-infinity")
        return -std::numeric_limits<double>::infinity();
    if (s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double json_number(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        fail(ErrorKind::Parse, fmt::format("{}: missing \"{}\"", where, key));
    const auto& v = obj.at(key);
    if (!v.is_number())
        fail(ErrorKind::Parse, fmt::format("{}: \"{}\" must be a number", where, key));
    return v.get<double>();
}

} // namespace

std::string format_number(double value) {
    if (value == 0.0)
        return "0";
    return fmt::format("{:.9g}", value);
}

void write_text_atomic(const fs::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path())
        fs::create_directories(path.parent_path(), ec);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorKind::Io, fmt::format("cannot open {} for writing", tmp.string()));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            fail(ErrorKind::Io, fmt::format("write failed for {}", tmp.string()));
    }
    fs::rename(tmp, path, ec);
    if (ec)
        fail(ErrorKind::Io, fmt::format("cannot move {} to {}: {}", tmp.string(), path.string(), ec.message()));
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, fmt::format("cannot read {}", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvTable& CsvTable::add_row(std::vector<std::string> cells) {
    require(cells.size() == header_.size(), "CSV row width does not match the header");
    rows_.push_back(std::move(cells));
    return *this;
}

std::string CsvTable::str() const {
    std::string out;
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& r : rows_)
        emit(r);
    return out;
}

std::string geometry_to_json(const LpdaGeometry& g) {
    Json doc;
    doc["band_label"] = g.band_label();
    doc["footprint_length_mm"] = g.footprint_length();
    doc["footprint_width_mm"] = g.footprint_width();
    const auto& s = g.substrate();
    doc["substrate"] = {{"relative_permittivity", s.relative_permittivity},
                        {"thickness_mm", s.thickness},
                        {"loss_tangent", s.loss_tangent},
                        {"effective_length_scale", s.effective_length_scale}};
    Json elements = Json::array();
    for (const auto& e : g.elements()) {
        Json item{{"arm_length_mm", e.arm_length}, {"strip_width_mm", e.strip_width}};
        if (e.spacing_to_next)
            item["spacing_to_next_mm"] = *e.spacing_to_next;
        elements.push_back(std::move(item));
    }
    doc["elements"] = std::move(elements);
    return doc.dump(2) + "\n";
}

LpdaGeometry geometry_from_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        fail(ErrorKind::Parse, fmt::format("malformed geometry JSON at line {}, column {}", line, col));
    }
    if (!doc.is_object())
        fail(ErrorKind::Parse, "geometry JSON must be an object");
    if (!doc.contains("elements") || !doc["elements"].is_array())
        fail(ErrorKind::Parse, "geometry JSON: missing \"elements\" array");

    SubstrateSpec substrate = fr4_substrate();
    if (doc.contains("substrate")) {
        const auto& s = doc["substrate"];
        substrate.relative_permittivity = json_number(s, "relative_permittivity", "substrate");
        substrate.thickness = json_number(s, "thickness_mm", "substrate");
        substrate.loss_tangent = json_number(s, "loss_tangent", "substrate");
        substrate.effective_length_scale = json_number(s, "effective_length_scale", "substrate");
    }
    std::vector<DipoleElement> elements;
    std::size_t index = 0;
    for (const auto& item : doc["elements"]) {
        const std::string where = fmt::format("elements[{}]", index++);
        DipoleElement e;
        e.arm_length = json_number(item, "arm_length_mm", where);
        e.strip_width = json_number(item, "strip_width_mm", where);
        if (item.contains("spacing_to_next_mm"))
            e.spacing_to_next = json_number(item, "spacing_to_next_mm", where);
        elements.push_back(e);
    }
    const std::string label = doc.contains("band_label") && doc["band_label"].is_string()
                                  ? doc["band_label"].get<std::string>()
                                  : std::string{};
    return LpdaGeometry(std::move(elements), substrate, json_number(doc, "footprint_length_mm", "geometry"),
                        json_number(doc, "footprint_width_mm", "geometry"), label);
}

LpdaGeometry load_geometry(const fs::path& path) {
    try {
        return geometry_from_json(read_text(path));
    } catch (const Error& e) {
        throw Error(e.kind(), fmt::format("{}: {}", path.string(), e.what()));
    }
}

void save_geometry(const fs::path& path, const LpdaGeometry& geometry) {
    write_text_atomic(path, geometry_to_json(geometry));
}

std::string s11_csv(std::span<const SweepSample> samples) {
    CsvTable t({"freq_mhz", "re_s11", "im_s11", "mag_db"});
    for (const auto& s : samples)
        t.add_row({format_number(s.frequency), format_number(s.reflection.real()), format_number(s.reflection.imag()),
                   format_number(magnitude_db(s.reflection))});
    return t.str();
}

std::string metrics_csv(std::span<const MetricsSample> samples) {
    CsvTable t({"freq_mhz", "directivity_dbi", "realized_gain_dbi", "hpbw_e_deg", "hpbw_h_deg", "ftb_db", "xpol_db"});
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& s : samples) {
        const auto& m = s.metrics;
        t.add_row({format_number(s.frequency), format_number(m.directivity), format_number(m.realized_gain),
                   format_number(m.hpbw_e_plane.value_or(nan)), format_number(m.hpbw_h_plane.value_or(nan)),
                   format_number(m.front_to_back), format_number(m.cross_pol_ratio)});
    }
    return t.str();
}

std::string pattern_csv(const FarFieldPattern& p) {
    CsvTable t({"theta_deg", "phi_deg", "re_etheta", "im_etheta", "re_ephi", "im_ephi"});
    for (std::size_t i = 0; i < p.theta_count(); ++i)
        for (std::size_t j = 0; j < p.phi_count(); ++j) {
            const Complex a = p.e_theta(i, j), b = p.e_phi(i, j);
            t.add_row({format_number(p.theta_deg(i)), format_number(p.phi_deg(j)), format_number(a.real()),
                       format_number(a.imag()), format_number(b.real()), format_number(b.imag())});
        }
    return t.str();
}

std::string tradeoff_csv(std::span<const TradeoffRow> rows) {
    CsvTable t({"alpha_deg", "height_mm", "spread_mm", "plf_linear", "plf_db"});
    for (const auto& r : rows)
        t.add_row({format_number(r.alpha), format_number(r.height), format_number(r.spread), format_number(r.plf_linear),
                   format_number(r.plf_db)});
    return t.str();
}

std::string coverage_csv(const CoverageProfile& profile) {
    CsvTable t({"azimuth_deg", "best_gain_dbi", "best_pole"});
    for (std::size_t k = 0; k < profile.azimuth.size(); ++k)
        t.add_row({format_number(profile.azimuth[k]), format_number(profile.best_gain[k]),
                   std::to_string(profile.best_pole[k])});
    return t.str();
}

std::string pole_map_csv(std::span<const PoleArc> arcs) {
    CsvTable t({"arc_start_deg", "arc_end_deg", "pole"});
    for (const auto& a : arcs)
        t.add_row({format_number(a.start), format_number(a.end), std::to_string(a.pole)});
    return t.str();
}

FarFieldPattern parse_pattern_csv(std::string_view text, double frequency) {
    auto lines = split(text, '\n');
    while (!lines.empty() && trim(lines.back()).empty())
        lines.pop_back();
    if (lines.empty() || trim(lines.front()) != "theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi")
        fail(ErrorKind::Parse, "pattern CSV: unexpected header");

    struct Row {
        double theta, phi;
        Complex et, ep;
    };
    std::vector<Row> rows;
    std::set<double> thetas, phis;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const auto cells = split(trim(lines[n]), ',');
        if (cells.size() != 6)
            fail(ErrorKind::Parse, fmt::format("pattern CSV line {}: expected 6 columns", n + 1));
        double v[6];
        for (int c = 0; c < 6; ++c) {
            const auto parsed = parse_double(cells[c]);
            if (!parsed)
                fail(ErrorKind::Parse, fmt::format("pattern CSV line {}, column {}: not a number", n + 1, c + 1));
            v[c] = *parsed;
        }
        rows.push_back({v[0], v[1], {v[2], v[3]}, {v[4], v[5]}});
        thetas.insert(v[0]);
        phis.insert(v[1]);
    }
    if (thetas.size() < 2 || phis.size() < 2)
        fail(ErrorKind::Parse, "pattern CSV: grid needs at least two theta and two phi values");
    const double theta_step = *std::next(thetas.begin()) - *thetas.begin();
    const double phi_step = *std::next(phis.begin()) - *phis.begin();
    const std::size_t nt = thetas.size(), np = phis.size();
    if (rows.size() != nt * np)
        fail(ErrorKind::Parse, fmt::format("pattern CSV: {} rows do not form a {}x{} grid", rows.size(), nt, np));

    std::vector<Complex> et(nt * np), ep(nt * np);
    for (const auto& r : rows) {
        const auto i = static_cast<std::size_t>(std::llround(r.theta / theta_step));
        const auto j = static_cast<std::size_t>(std::llround(r.phi / phi_step));
        if (i >= nt || j >= np)
            fail(ErrorKind::Parse, "pattern CSV: sample outside the regular grid");
        et[i * np + j] = r.et;
        ep[i * np + j] = r.ep;
    }
    try {
        return FarFieldPattern(frequency, theta_step, phi_step, std::move(et), std::move(ep));
    } catch (const Error& e) {
        fail(ErrorKind::Parse, fmt::format("pattern CSV: {}", e.what()));
    }
}

Config Config::parse(std::string_view text) {
    Config cfg;
    std::string section;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        // Strip comments outside quoted strings.
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"')
                quoted = !quoted;
            else if (line[i] == '#' && !quoted) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                fail(ErrorKind::Parse, fmt::format("config line {}: malformed section header", line_no));
            section = std::string(trim(line.substr(1, line.size() - 2)));
            cfg.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorKind::Parse, fmt::format("config line {}: expected key = value", line_no));
        if (section.empty())
            fail(ErrorKind::Parse, fmt::format("config line {}: key outside of a [section]", line_no));
        const auto key = std::string(trim(line.substr(0, eq)));
        auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            fail(ErrorKind::Parse, fmt::format("config line {}: empty key or value", line_no));
        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                fail(ErrorKind::Parse, fmt::format("config line {}: unterminated string", line_no));
            value = value.substr(1, value.size() - 2);
        }
        cfg.sections_[section][key] = std::string(value);
    }
    return cfg;
}

Config Config::load(const fs::path& path) { return parse(read_text(path)); }

void Config::require_section(const std::string& section) const {
    if (!has_section(section))
        fail(ErrorKind::Config, fmt::format("missing section [{}]", section));
}

std::optional<std::string> Config::raw(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end())
        return std::nullopt;
    const auto k = s->second.find(key);
    if (k == s->second.end())
        return std::nullopt;
    return k->second;
}

double Config::get_double(const std::string& section, const std::string& key, double fallback) const {
    const auto v = raw(section, key);
    if (!v)
        return fallback;
    const auto d = parse_double(*v);
    if (!d)
        fail(ErrorKind::Config, fmt::format("[{}].{}: '{}' is not a number", section, key, *v));
    return *d;
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key, std::uint64_t fallback) const {
    const auto v = raw(section, key);
    if (!v)
        return fallback;
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc{} || ptr != v->data() + v->size())
        fail(ErrorKind::Config, fmt::format("[{}].{}: '{}' is not a non-negative integer", section, key, *v));
    return out;
}

std::size_t Config::get_size(const std::string& section, const std::string& key, std::size_t fallback) const {
    return static_cast<std::size_t>(get_u64(section, key, fallback));
}

std::string Config::get_string(const std::string& section, const std::string& key, const std::string& fallback) const {
    return raw(section, key).value_or(fallback);
}

std::vector<std::string> Config::unknown_keys(const std::string& section, std::span<const std::string_view> known) const {
    std::vector<std::string> out;
    const auto s = sections_.find(section);
    if (s == sections_.end())
        return out;
    for (const auto& [key, value] : s->second)
        if (std::find(known.begin(), known.end(), key) == known.end())
            out.push_back(key);
    return out;
}

} // namespace lpdamimo
