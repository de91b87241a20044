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

#include <benchmark/benchmark.h>

#include <limits>

#include <lpdamimo/lpdamimo.hpp>

using namespace lpdamimo;

namespace {

void BM_SelfImpedance(benchmark::State& state) {
    const double lam = kSpeedOfLight / 800.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(self_impedance(lam / 4, 1.0, 800.0));
}
BENCHMARK(BM_SelfImpedance);

void BM_ImpedanceMatrix(benchmark::State& state) {
    const auto dipoles = dipole_array(prototype_fixture("LB"));
    for (auto _ : state)
        benchmark::DoNotOptimize(impedance_matrix(dipoles, 800.0));
}
BENCHMARK(BM_ImpedanceMatrix);

void BM_SolveDrive(benchmark::State& state) {
    const bool high = state.range(0) != 0;
    const auto geometry = prototype_fixture(high ? "HB" : "LB");
    const double f = high ? 2400.0 : 800.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_drive(geometry, f));
}
BENCHMARK(BM_SolveDrive)->Arg(0)->Arg(1);

void BM_FarField(benchmark::State& state) {
    const auto geometry = prototype_fixture("LB");
    const auto sol = solve_drive(geometry, 800.0);
    const double step = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(far_field(sol, geometry, step));
}
BENCHMARK(BM_FarField)->Arg(1)->Arg(5);

void BM_Metrics(benchmark::State& state) {
    const auto geometry = prototype_fixture("LB");
    const auto sol = solve_drive(geometry, 800.0);
    const auto pattern = far_field(sol, geometry, 1.0);
    const Complex r = s11(sol.input_impedance, 50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_metrics(pattern, r));
}
BENCHMARK(BM_Metrics);

void BM_Coverage(benchmark::State& state) {
    const auto geometry = prototype_fixture("LB");
    const auto pattern = far_field(solve_drive(geometry, 800.0), geometry, 1.0);
    std::vector<PoleAssembly> poles;
    for (int k = 0; k < 4; ++k) {
        PoleAssembly a;
        a.pole = static_cast<Pole>(k);
        a.lb_pattern = pattern;
        poles.push_back(a);
    }
    const OmniSet set(std::move(poles));
    for (auto _ : state)
        benchmark::DoNotOptimize(composite_coverage(set, Band::LB));
}
BENCHMARK(BM_Coverage);

void BM_GaSphere(benchmark::State& state) {
    GaConfig cfg;
    cfg.population = 40;
    cfg.generations = 200;
    cfg.seed = 7;
    cfg.termination_error = std::numeric_limits<double>::infinity();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ga(cfg, 6, [](std::span<const double> g) { return sphere(g); }));
}
BENCHMARK(BM_GaSphere)->Unit(benchmark::kMillisecond);

void BM_EvaluateError(benchmark::State& state) {
    const auto genome = genome_from_geometry(prototype_fixture("LB"), 100.0);
    const auto sweep = FrequencySweep::linear(700, 900, 20);
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_error(genome, DesignGoals{}, ErrorWeights{}, sweep));
}
BENCHMARK(BM_EvaluateError)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
