// SPDX-License-Identifier: Apache-2.0
//
// ringsynth: pattern synthesis for concentric ring antenna arrays
// Copyright (C) 2026 The ringsynth authors
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

#include "ringsynth/solver.hpp"
#include "ringsynth/specialfn.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ringsynth;

static void BM_BesselJ0(benchmark::State& state)
{
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j0(x));
        x += 0.37;
        if (x > 60.0)
            x = 0.0;
    }
}
BENCHMARK(BM_BesselJ0);

static void BM_RlsAbsorb(benchmark::State& state)
{
    const auto n = static_cast<Eigen::Index>(state.range(0));
    std::mt19937_64 rng(1);
    std::normal_distribution<double> d;
    Eigen::VectorXd row(n);
    for (Eigen::Index i = 0; i < n; ++i)
        row(i) = d(rng);
    SolverState s{Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Identity(n, n)};
    for (auto _ : state) {
        auto next = rls_absorb(s, row, 1.0);
        benchmark::DoNotOptimize(next.estimate.data());
    }
}
BENCHMARK(BM_RlsAbsorb)->Arg(10)->Arg(15)->Arg(21);

static void BM_SynthesizeFlatTop(benchmark::State& state)
{
    const auto geom = uniform_half_wavelength_geometry(static_cast<int>(state.range(0)), 1.0);
    const auto target = flat_top(0.4, 0.0);
    for (auto _ : state) {
        auto r = synthesize(geom, target);
        benchmark::DoNotOptimize(r.weights.center);
    }
}
BENCHMARK(BM_SynthesizeFlatTop)->Arg(9)->Arg(14)->Arg(20);

static void BM_SynthesizeNulls(benchmark::State& state)
{
    const auto geom = uniform_half_wavelength_geometry(14, 1.0);
    const auto target = with_nulls(equi_ripple(-16.0, 12), {-0.5, 0.5}, -40.0, 0.1);
    for (auto _ : state) {
        auto r = synthesize(geom, target);
        benchmark::DoNotOptimize(r.weights.center);
    }
}
BENCHMARK(BM_SynthesizeNulls);
BENCHMARK_MAIN();
