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
#include <functional>
#include <utility>
#include <vector>

namespace lpdamimo {

using Complex = std::complex<double>;

/// Complex far-field samples on a regular spherical grid at one frequency.
///
/// theta covers [0, 180] inclusive and phi covers [0, 360) exclusive, both in degrees.
/// Samples are stored theta-major: index = theta_index * phi_count() + phi_index.
/// Fields are unnormalized but share one linear scale.
class FarFieldPattern {
  public:
    using FieldFunction = std::function<std::pair<Complex, Complex>(double theta_deg, double phi_deg)>;

    FarFieldPattern(double frequency, double theta_step, double phi_step, std::vector<Complex> e_theta,
                    std::vector<Complex> e_phi);

    /// Samples (E_theta, E_phi) = field(theta_deg, phi_deg) on the grid.
    static FarFieldPattern sample(double frequency, double theta_step, double phi_step, const FieldFunction& field);

    double frequency() const { return frequency_; }
    double theta_step() const { return theta_step_; }
    double phi_step() const { return phi_step_; }
    std::size_t theta_count() const { return theta_count_; }
    std::size_t phi_count() const { return phi_count_; }
    std::size_t size() const { return theta_count_ * phi_count_; }

    double theta_deg(std::size_t i) const { return static_cast<double>(i) * theta_step_; }
    double phi_deg(std::size_t j) const { return static_cast<double>(j) * phi_step_; }
    std::size_t index(std::size_t i, std::size_t j) const { return i * phi_count_ + j; }

    const std::vector<Complex>& e_theta() const { return e_theta_; }
    const std::vector<Complex>& e_phi() const { return e_phi_; }
    Complex e_theta(std::size_t i, std::size_t j) const { return e_theta_[index(i, j)]; }
    Complex e_phi(std::size_t i, std::size_t j) const { return e_phi_[index(i, j)]; }

    /// |E_theta|^2 + |E_phi|^2 at a grid node.
    double power(std::size_t i, std::size_t j) const { return std::norm(e_theta_[index(i, j)]) + std::norm(e_phi_[index(i, j)]); }

    /// Power interpolated bilinearly at an arbitrary direction (phi wraps).
    double power_at(double theta_deg, double phi_deg) const;

    /// Complex fields interpolated bilinearly at an arbitrary direction.
    std::pair<Complex, Complex> field_at(double theta_deg, double phi_deg) const;

    bool same_grid(const FarFieldPattern& other) const;

  private:
    struct Stencil {
        std::size_t i0, i1, j0, j1;
        double wt, wp;
    };
    Stencil stencil(double theta_deg, double phi_deg) const;

    double frequency_;
    double theta_step_;
    double phi_step_;
    std::size_t theta_count_;
    std::size_t phi_count_;
    std::vector<Complex> e_theta_;
    std::vector<Complex> e_phi_;
};

/// Number of grid intervals when step divides span; throws otherwise.
std::size_t grid_divisions(double span_deg, double step_deg);

} // namespace lpdamimo
