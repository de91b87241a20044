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

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpdamimo/far_field_pattern.hpp"
#include "lpdamimo/geometry.hpp"

namespace lpdamimo {

/// Strictly increasing list of frequencies in MHz.
class FrequencySweep {
  public:
    explicit FrequencySweep(std::vector<double> points);

    /// start, start + step, ... up to and including stop (within 1e-9 of a step).
    static FrequencySweep linear(double start, double stop, double step);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

  private:
    std::vector<double> points_;
};

/// A center-fed, z-directed sinusoidal-current dipole located on the boom (x axis).
/// half_length is the electrical arm length used in all wavelength comparisons.
struct ParallelDipole {
    double half_length = 0.0; // mm
    double radius = 0.0;      // mm
    double position = 0.0;    // mm along the boom
};

/// Electrical model of a geometry: arms scaled by the substrate shortening factor,
/// printed strips converted to equivalent wire radii, physical boom positions.
std::vector<ParallelDipole> dipole_array(const LpdaGeometry& geometry);

/// Equivalent round-wire radius of a thin flat strip (width / 4).
double equivalent_radius(double strip_width);

/// Induced-EMF input impedance of an isolated dipole, referred to its base current.
/// Throws NumericalSingularity when the base current of the sinusoidal distribution vanishes.
Complex self_impedance(double arm_length, double radius, double frequency);

/// Returns a warning when the dipole is too fat for the thin-wire kernel (arm < 10 radius).
std::optional<std::string> thin_wire_warning(double arm_length, double radius);

/// Induced-EMF mutual impedance of two side-by-side parallel dipoles referred to base
/// currents. Symmetric in its arguments bit-for-bit.
Complex mutual_impedance(const ParallelDipole& a, const ParallelDipole& b, double frequency);

/// Dense complex square matrix stored row-major.
class ImpedanceMatrix {
  public:
    explicit ImpedanceMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    std::size_t order() const { return order_; }
    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    const std::vector<Complex>& entries() const { return entries_; }

    /// Largest |Z_ij - Z_ji| / max|Z|.
    double asymmetry() const;

  private:
    std::size_t order_;
    std::vector<Complex> entries_;
};

ImpedanceMatrix impedance_matrix(std::span<const ParallelDipole> dipoles, double frequency);

/// ABCD transfer matrix of a two-port.
struct TwoPort {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    TwoPort operator*(const TwoPort& rhs) const;
};

/// Lossless line of the given length (mm) and characteristic impedance at frequency.
/// A transposed section reverses polarity: the matrix is negated.
TwoPort line_section(double length, double z0, double frequency, bool transposed, double velocity_factor = 1.0);

/// Impedance seen at port 1 when port 2 is loaded with load.
Complex input_impedance(const TwoPort& network, Complex load);

struct FeederOptions {
    double z0 = 100.0;
    /// Load across the large-element end; nullopt leaves it open.
    std::optional<Complex> termination;
    /// Line between the smallest element and the source terminals, mm.
    std::optional<double> feed_offset;
    /// Phase velocity on the feeder relative to free space.
    double velocity_factor = 1.0;
};

/// Transposed two-wire feed connecting all element bases. sections[i] joins element i
/// to element i+1; admittance is the nodal admittance matrix of the whole feeder
/// including the termination, row-major.
struct FeederNetwork {
    std::vector<TwoPort> sections;
    std::vector<Complex> admittance;
    std::size_t order = 0;
    std::optional<TwoPort> feed_line;
};

FeederNetwork feeder_network(std::span<const ParallelDipole> dipoles, const FeederOptions& options, double frequency);
FeederNetwork feeder_network(const LpdaGeometry& geometry, double feeder_z0, double frequency);

struct DriveSolution {
    double frequency = 0.0;
    std::vector<Complex> base_currents;  // A, per element, for a 1 A source
    std::vector<Complex> base_voltages;  // V, per element
    Complex input_impedance;             // ohms at the source terminals
    double residual = 0.0;               // ||A x - b|| / ||b|| of the coupled system
    std::vector<std::string> warnings;
};

/// Solves the coupled element/feeder system with a 1 A source at the smallest element.
/// Throws NumericalSingularity naming the frequency when the system is singular.
DriveSolution solve_drive(std::span<const ParallelDipole> dipoles, const FeederOptions& options, double frequency);
DriveSolution solve_drive(const LpdaGeometry& geometry, double frequency, double feeder_z0 = 100.0);

/// Reflection coefficient (Z - Z0) / (Z + Z0).
Complex s11(Complex input_impedance, double reference);

/// 20 log10 |s|, -infinity for a perfect match.
double magnitude_db(Complex s);

/// Superposed element patterns. tilt rotates every dipole about the boom axis (degrees),
/// positive tilt turning a vertical dipole toward equal in-phase E_theta and E_phi.
FarFieldPattern far_field(const DriveSolution& solution, std::span<const ParallelDipole> dipoles, double grid_step,
                          double tilt = 0.0);
FarFieldPattern far_field(const DriveSolution& solution, const LpdaGeometry& geometry, double grid_step = 1.0,
                          double tilt = 0.0);

} // namespace lpdamimo
