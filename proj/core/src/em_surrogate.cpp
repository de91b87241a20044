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

#include "lpdamimo/em_surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "lpdamimo/error.hpp"
#include "lpdamimo/units.hpp"

namespace lpdamimo {

namespace {

constexpr Complex kJ{0.0, 1.0};

// Smallest |sin(k h)| accepted when referring a sinusoidal current to its base.
constexpr double kBaseCurrentFloor = 1e-6;

// Relative quadrature tolerance; impedances are O(1..1e3) ohms, so this keeps the
// absolute error well under 1e-6 ohm.
constexpr double kQuadratureTolerance = 1e-11;
constexpr unsigned kQuadratureDepth = 18;

template <class F>
Complex integrate(F f, double a, double b) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    return Rule::integrate(f, a, b, kQuadratureDepth, kQuadratureTolerance);
}

// Induced EMF on a target dipole of half-length target_h from a sinusoidal current
// filament of half-length source_h, parallel and centered at lateral distance rho.
// Referred to the current maxima of both distributions.
Complex induced_emf(double source_h, double target_h, double rho, double k) {
    const double cos_kh = std::cos(k * source_h);
    auto kernel = [=](double z) -> Complex {
        const double r1 = std::hypot(rho, z - source_h);
        const double r2 = std::hypot(rho, z + source_h);
        const double r0 = std::hypot(rho, z);
        const Complex g = std::exp(-kJ * (k * r1)) / r1 + std::exp(-kJ * (k * r2)) / r2 -
                          2.0 * cos_kh * std::exp(-kJ * (k * r0)) / r0;
        return std::sin(k * (target_h - z)) * g;
    };
    // The integrand is even in z for centered parallel dipoles.
    Complex sum;
    if (source_h > 0.0 && source_h < target_h)
        sum = integrate(kernel, 0.0, source_h) + integrate(kernel, source_h, target_h);
    else
        sum = integrate(kernel, 0.0, target_h);
    return kJ * (kEta0 / (4.0 * kPi)) * 2.0 * sum;
}

double base_factor(double half_length, double k, double frequency) {
    const double s = std::sin(k * half_length);
    if (std::abs(s) < kBaseCurrentFloor)
        fail(ErrorKind::NumericalSingularity,
             fmt::format("base current vanishes for a {:.6g} mm arm at {:.9g} MHz", half_length, frequency));
    return s;
}

void check_frequency(double frequency) {
    require(std::isfinite(frequency) && frequency > 0.0, fmt::format("frequency must be positive, got {}", frequency));
}

} // namespace

FrequencySweep::FrequencySweep(std::vector<double> points) : points_(std::move(points)) {
    require(!points_.empty(), "frequency sweep is empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        require(std::isfinite(points_[i]) && points_[i] > 0.0, "sweep frequencies must be positive");
        if (i > 0)
            require(points_[i] > points_[i - 1], "sweep frequencies must be strictly increasing");
    }
}

FrequencySweep FrequencySweep::linear(double start, double stop, double step) {
    require(step > 0.0 && stop >= start, fmt::format("invalid sweep {}:{}:{}", start, stop, step));
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = start + static_cast<double>(i) * step;
    return FrequencySweep(std::move(pts));
}

std::vector<ParallelDipole> dipole_array(const LpdaGeometry& geometry) {
    const double scale = geometry.substrate().effective_length_scale;
    const auto x = geometry.element_positions();
    std::vector<ParallelDipole> out;
    out.reserve(geometry.size());
    for (std::size_t i = 0; i < geometry.size(); ++i)
        out.push_back({geometry[i].arm_length * scale, equivalent_radius(geometry[i].strip_width), x[i]});
    return out;
}

double equivalent_radius(double strip_width) {
    require(std::isfinite(strip_width) && strip_width > 0.0, "strip width must be positive");
    return strip_width / 4.0;
}

Complex self_impedance(double arm_length, double radius, double frequency) {
    check_frequency(frequency);
    if (!(arm_length > 0.0 && radius > 0.0) || radius >= arm_length)
        fail(ErrorKind::NumericalSingularity,
             fmt::format("degenerate dipole: arm {} mm, radius {} mm", arm_length, radius));
    const double k = wavenumber(frequency);
    const double s = base_factor(arm_length, k, frequency);
    return induced_emf(arm_length, arm_length, radius, k) / (s * s);
}

std::optional<std::string> thin_wire_warning(double arm_length, double radius) {
    if (arm_length < 10.0 * radius)
        return fmt::format("arm {:.4g} mm is less than 10 radii ({:.4g} mm); thin-wire kernel is approximate",
                           arm_length, radius);
    return std::nullopt;
}

Complex mutual_impedance(const ParallelDipole& a, const ParallelDipole& b, double frequency) {
    check_frequency(frequency);
    const double rho = std::abs(a.position - b.position);
    if (!(rho > 0.0))
        fail(ErrorKind::Precondition, "mutual impedance needs a non-zero separation");
    require(a.half_length > 0.0 && b.half_length > 0.0, "dipole half-lengths must be positive");
    // Integrate along the same element regardless of argument order.
    const bool swap = std::tie(a.half_length, a.position) > std::tie(b.half_length, b.position);
    const ParallelDipole& src = swap ? b : a;
    const ParallelDipole& dst = swap ? a : b;
    const double k = wavenumber(frequency);
    const double sa = base_factor(src.half_length, k, frequency);
    const double sb = base_factor(dst.half_length, k, frequency);
    return induced_emf(src.half_length, dst.half_length, rho, k) / (sa * sb);
}

double ImpedanceMatrix::asymmetry() const {
    double peak = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) {
            peak = std::max(peak, std::abs((*this)(i, j)));
            diff = std::max(diff, std::abs((*this)(i, j) - (*this)(j, i)));
        }
    return peak > 0.0 ? diff / peak : 0.0;
}

ImpedanceMatrix impedance_matrix(std::span<const ParallelDipole> dipoles, double frequency) {
    ImpedanceMatrix z(dipoles.size());
    for (std::size_t i = 0; i < dipoles.size(); ++i) {
        z(i, i) = self_impedance(dipoles[i].half_length, dipoles[i].radius, frequency);
        for (std::size_t j = i + 1; j < dipoles.size(); ++j)
            z(i, j) = z(j, i) = mutual_impedance(dipoles[i], dipoles[j], frequency);
    }
    return z;
}

TwoPort TwoPort::operator*(const TwoPort& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
}

TwoPort line_section(double length, double z0, double frequency, bool transposed, double velocity_factor) {
    require(z0 > 0.0, fmt::format("feeder impedance must be positive, got {}", z0));
    require(length >= 0.0, "line length must be non-negative");
    check_frequency(frequency);
    require(velocity_factor > 0.0 && velocity_factor <= 1.0, "velocity factor must lie in (0, 1]");
    const double theta = wavenumber(frequency) * length / velocity_factor;
    const double c = std::cos(theta), s = std::sin(theta);
    TwoPort t{Complex(c), kJ * (z0 * s), kJ * (s / z0), Complex(c)};
    if (transposed)
        t = {-t.a, -t.b, -t.c, -t.d};
    return t;
}

Complex input_impedance(const TwoPort& n, Complex load) { return (n.a * load + n.b) / (n.c * load + n.d); }

FeederNetwork feeder_network(std::span<const ParallelDipole> dipoles, const FeederOptions& options, double frequency) {
    require(options.z0 > 0.0, fmt::format("feeder impedance must be positive, got {}", options.z0));
    check_frequency(frequency);
    const std::size_t n = dipoles.size();
    FeederNetwork net;
    net.order = n;
    net.admittance.assign(n * n, Complex{});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double length = dipoles[i + 1].position - dipoles[i].position;
        const TwoPort t = line_section(length, options.z0, frequency, true, options.velocity_factor);
        net.sections.push_back(t);
        if (std::abs(t.b) < 1e-12 * options.z0)
            fail(ErrorKind::NumericalSingularity,
                 fmt::format("feeder section {} is a multiple of a half wavelength at {:.9g} MHz", i, frequency));
        const Complex det = t.a * t.d - t.b * t.c;
        net.admittance[i * n + i] += t.d / t.b;
        net.admittance[i * n + i + 1] += -det / t.b;
        net.admittance[(i + 1) * n + i] += -1.0 / t.b;
        net.admittance[(i + 1) * n + i + 1] += t.a / t.b;
    }
    if (options.termination) {
        require(std::abs(*options.termination) > 0.0, "termination impedance must be non-zero");
        net.admittance[0] += 1.0 / *options.termination;
    }
    if (options.feed_offset)
        net.feed_line = line_section(*options.feed_offset, options.z0, frequency, false, options.velocity_factor);
    return net;
}

FeederNetwork feeder_network(const LpdaGeometry& geometry, double feeder_z0, double frequency) {
    const auto dipoles = dipole_array(geometry);
    return feeder_network(dipoles, FeederOptions{feeder_z0, std::nullopt, geometry.feed_offset()}, frequency);
}

DriveSolution solve_drive(std::span<const ParallelDipole> dipoles, const FeederOptions& options, double frequency) {
    check_frequency(frequency);
    require(!dipoles.empty(), "no elements to drive");
    const std::size_t n = dipoles.size();

    DriveSolution sol;
    sol.frequency = frequency;
    for (const auto& d : dipoles)
        if (auto w = thin_wire_warning(d.half_length, d.radius))
            sol.warnings.push_back(*w);

    const ImpedanceMatrix z = impedance_matrix(dipoles, frequency);
    const FeederNetwork feeder = feeder_network(dipoles, options, frequency);

    Eigen::MatrixXcd za(n, n), yf(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            za(i, j) = z(i, j);
            yf(i, j) = feeder.admittance[i * n + j];
        }
    // Node currents: source = feeder + element branches, with element voltages Z_A I_A.
    const Eigen::MatrixXcd system = yf * za + Eigen::MatrixXcd::Identity(n, n);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
    rhs(n - 1) = 1.0;

    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system);
    const double rcond = lu.rcond();
    const Eigen::VectorXcd currents = lu.solve(rhs);
    if (!(rcond > 1e-14) || !currents.allFinite())
        fail(ErrorKind::NumericalSingularity, fmt::format("singular drive system at {:.9g} MHz", frequency));
    sol.residual = (system * currents - rhs).norm() / rhs.norm();

    const Eigen::VectorXcd voltages = za * currents;
    sol.base_currents.assign(currents.data(), currents.data() + n);
    sol.base_voltages.assign(voltages.data(), voltages.data() + n);
    const Complex z_terminals = voltages(n - 1) / rhs(n - 1);
    sol.input_impedance = feeder.feed_line ? input_impedance(*feeder.feed_line, z_terminals) : z_terminals;
    if (!std::isfinite(sol.input_impedance.real()) || !std::isfinite(sol.input_impedance.imag()))
        fail(ErrorKind::NumericalSingularity, fmt::format("non-finite input impedance at {:.9g} MHz", frequency));
    return sol;
}

DriveSolution solve_drive(const LpdaGeometry& geometry, double frequency, double feeder_z0) {
    const auto dipoles = dipole_array(geometry);
    return solve_drive(dipoles, FeederOptions{feeder_z0, std::nullopt, geometry.feed_offset()}, frequency);
}

Complex s11(Complex z, double reference) {
    require(reference > 0.0, "reference impedance must be positive");
    const Complex den = z + reference;
    if (den == Complex{})
        fail(ErrorKind::NumericalSingularity, "reflection coefficient pole: Z = -Z0");
    return (z - reference) / den;
}

double magnitude_db(Complex s) { return 20.0 * std::log10(std::abs(s)); }

FarFieldPattern far_field(const DriveSolution& solution, std::span<const ParallelDipole> dipoles, double grid_step,
                          double tilt) {
    require(solution.base_currents.size() == dipoles.size(), "drive solution does not match the element count");
    const double f = solution.frequency;
    const double k = wavenumber(f);
    const std::size_t n = dipoles.size();

    std::vector<Complex> loop_current(n);
    std::vector<double> kh(n), cos_kh(n);
    for (std::size_t i = 0; i < n; ++i) {
        kh[i] = k * dipoles[i].half_length;
        cos_kh[i] = std::cos(kh[i]);
        loop_current[i] = solution.base_currents[i] / base_factor(dipoles[i].half_length, k, f);
    }
    const double t = deg_to_rad(tilt);
    const double uy = -std::sin(t), uz = std::cos(t);
    const Complex scale = -kJ * kEta0 / (2.0 * kPi);

    return FarFieldPattern::sample(f, grid_step, grid_step, [&](double theta_deg, double phi_deg) {
        const double th = deg_to_rad(theta_deg), ph = deg_to_rad(phi_deg);
        const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
        const double cos_psi = uy * st * sp + uz * ct;
        const double sin2_psi = 1.0 - cos_psi * cos_psi;
        if (sin2_psi < 1e-24)
            return std::pair<Complex, Complex>{};
        Complex sum;
        for (std::size_t i = 0; i < n; ++i) {
            const double shape = (std::cos(kh[i] * cos_psi) - cos_kh[i]) / sin2_psi;
            sum += loop_current[i] * shape * std::exp(kJ * (k * dipoles[i].position * st * cp));
        }
        const double u_theta = uy * ct * sp - uz * st;
        const double u_phi = uy * cp;
        return std::pair<Complex, Complex>{scale * u_theta * sum, scale * u_phi * sum};
    });
}

FarFieldPattern far_field(const DriveSolution& solution, const LpdaGeometry& geometry, double grid_step, double tilt) {
    const auto dipoles = dipole_array(geometry);
    return far_field(solution, dipoles, grid_step, tilt);
}

} // namespace lpdamimo
