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

#include "oracles.hpp"

#include <cmath>
#include <functional>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_expint.h>

namespace oracle {

namespace {

struct Workspace {
    gsl_integration_workspace* w = gsl_integration_workspace_alloc(4000);
    ~Workspace() { gsl_integration_workspace_free(w); }
};

double integrate(const std::function<double(double)>& f, double a, double b) {
    thread_local Workspace ws;
    gsl_set_error_handler_off();
    gsl_function fn;
    fn.function = [](double x, void* p) { return (*static_cast<const std::function<double(double)>*>(p))(x); };
    fn.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, err = 0.0;
    gsl_integration_qag(&fn, a, b, 1e-13, 1e-12, 4000, GSL_INTEG_GAUSS61, ws.w, &result, &err);
    return result;
}

Complex integrate_complex(const std::function<Complex(double)>& f, const std::vector<double>& breaks) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        re += integrate([&](double x) { return f(x).real(); }, breaks[i], breaks[i + 1]);
        im += integrate([&](double x) { return f(x).imag(); }, breaks[i], breaks[i + 1]);
    }
    return {re, im};
}

Complex green(double kk, double r) { return std::exp(Complex(0.0, -kk * r)) / r; }

// Field of dipole (ha) at lateral distance rho, integrated against dipole (hb) current.
Complex induced_emf(double ha, double hb, double rho, double f) {
    const double kk = k(f);
    auto integrand = [&](double z) {
        const double r1 = std::hypot(rho, z - ha), r2 = std::hypot(rho, z + ha), r0 = std::hypot(rho, z);
        const Complex field = green(kk, r1) + green(kk, r2) - 2.0 * std::cos(kk * ha) * green(kk, r0);
        return std::sin(kk * (hb - std::abs(z))) * field;
    };
    std::vector<double> breaks{-hb, 0.0, hb};
    if (ha < hb) {
        breaks = {-hb, -ha, 0.0, ha, hb};
    }
    const Complex integral = integrate_complex(integrand, breaks);
    const Complex zm = Complex(0.0, eta / (4.0 * M_PI)) * integral;
    return zm / (std::sin(kk * ha) * std::sin(kk * hb));
}

} // namespace

double k(double f) { return 2.0 * M_PI * f / c0; }
double lambda(double f) { return c0 / f; }

Complex self_impedance_quad(double h, double a, double f) { return induced_emf(h, h, a, f); }

Complex mutual_impedance_quad(double ha, double hb, double d, double f) { return induced_emf(ha, hb, d, f); }

Complex self_impedance_sici(double l, double a, double f) {
    const double kl = k(f) * l, ka = k(f) * a;
    const double C = euler_gamma;
    auto Si = gsl_sf_Si;
    auto Ci = gsl_sf_Ci;
    const double rm = eta / (2.0 * M_PI) *
                      (C + std::log(kl) - Ci(kl) + 0.5 * std::sin(kl) * (Si(2 * kl) - 2 * Si(kl)) +
                       0.5 * std::cos(kl) * (C + std::log(kl / 2) + Ci(2 * kl) - 2 * Ci(kl)));
    const double xm = eta / (4.0 * M_PI) *
                      (2 * Si(kl) + std::cos(kl) * (2 * Si(kl) - Si(2 * kl)) -
                       std::sin(kl) * (2 * Ci(kl) - Ci(2 * kl) - Ci(2 * ka * ka / kl)));
    const double s = std::sin(kl / 2);
    return Complex(rm, xm) / (s * s);
}

Complex mutual_half_wave_sici(double d, double f) {
    const double l = lambda(f) / 2.0, kk = k(f);
    const double u0 = kk * d;
    const double u1 = kk * (std::sqrt(d * d + l * l) + l);
    const double u2 = kk * (std::sqrt(d * d + l * l) - l);
    const double r = eta / (4.0 * M_PI) * (2 * gsl_sf_Ci(u0) - gsl_sf_Ci(u1) - gsl_sf_Ci(u2));
    const double x = -eta / (4.0 * M_PI) * (2 * gsl_sf_Si(u0) - gsl_sf_Si(u1) - gsl_sf_Si(u2));
    return {r, x};
}

double dipole_pattern(double kh, double theta) {
    auto raw = [kh](double t) {
        const double s = std::sin(t);
        return s < 1e-12 ? 0.0 : std::abs((std::cos(kh * std::cos(t)) - std::cos(kh)) / s);
    };
    return raw(theta) / raw(M_PI / 2);
}

double dipole_directivity(double kh) {
    const double power = integrate(
        [kh](double t) {
            const double p = dipole_pattern(kh, t);
            return p * p * std::sin(t);
        },
        0.0, M_PI);
    return 2.0 / power;
}

double cos_power_half_angle(int m) {
    double lo = 0.0, hi = M_PI / 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::pow(std::cos(mid), 2 * m) > 0.5)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi) * 180.0 / M_PI;
}

double naive_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s = s + v[i];
    return s;
}

std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

} // namespace oracle
