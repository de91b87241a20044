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

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpdamimo/em_surrogate.hpp"
#include "lpdamimo/far_field_pattern.hpp"
#include "lpdamimo/geometry.hpp"
#include "lpdamimo/omni.hpp"
#include "lpdamimo/pattern_metrics.hpp"
#include "lpdamimo/placement.hpp"

namespace lpdamimo {

/// Locale-independent, 9 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value);

/// Writes to a sibling temporary file and renames it over path.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_text(const std::filesystem::path& path);

/// Header plus rows of pre-formatted cells, rendered with '\n' line endings.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    CsvTable& add_row(std::vector<std::string> cells);
    std::size_t row_count() const { return rows_.size(); }
    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// ---- geometry JSON --------------------------------------------------------

std::string geometry_to_json(const LpdaGeometry& geometry);

/// Throws Parse with line and column for malformed documents, Precondition for
/// documents that violate the geometry invariants.
LpdaGeometry geometry_from_json(std::string_view text);

LpdaGeometry load_geometry(const std::filesystem::path& path);
void save_geometry(const std::filesystem::path& path, const LpdaGeometry& geometry);

// ---- CSV exports ----------------------------------------------------------

struct SweepSample {
    double frequency = 0.0;
    Complex reflection;
};

struct MetricsSample {
    double frequency = 0.0;
    PatternMetrics metrics;
};

std::string s11_csv(std::span<const SweepSample> samples);
std::string metrics_csv(std::span<const MetricsSample> samples);
std::string pattern_csv(const FarFieldPattern& pattern);
std::string tradeoff_csv(std::span<const TradeoffRow> rows);
std::string coverage_csv(const CoverageProfile& profile);
std::string pole_map_csv(std::span<const PoleArc> arcs);

/// Reads a pattern CSV written by pattern_csv; the grid is inferred from the samples.
FarFieldPattern parse_pattern_csv(std::string_view text, double frequency);

// ---- configuration --------------------------------------------------------

/// TOML-style key/value document: [section] headers, key = value lines, '#' comments.
/// Values may be bare numbers, true/false, inf/-inf, or double-quoted strings.
class Config {
  public:
    static Config parse(std::string_view text);
    static Config load(const std::filesystem::path& path);

    bool has_section(const std::string& section) const { return sections_.count(section) > 0; }
    /// Throws Config naming "[section]" when absent.
    void require_section(const std::string& section) const;

    std::optional<std::string> raw(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::size_t get_size(const std::string& section, const std::string& key, std::size_t fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key, std::uint64_t fallback) const;
    std::string get_string(const std::string& section, const std::string& key, const std::string& fallback) const;

    /// Keys present in a section that are not in known; used to reject typos.
    std::vector<std::string> unknown_keys(const std::string& section, std::span<const std::string_view> known) const;

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

} // namespace lpdamimo
