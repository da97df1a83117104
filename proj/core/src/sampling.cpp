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

#include "ringsynth/sampling.hpp"

#include "ringsynth/errors.hpp"
#include "ringsynth/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace ringsynth {

SampleSet::SampleSet(std::vector<double> abscissas, std::vector<double> values,
                     std::size_t batch_count)
    : abscissas_(std::move(abscissas)), values_(std::move(values)), batch_count_(batch_count)
{
    if (abscissas_.size() != values_.size())
        throw DomainError("sample set: abscissa and value counts differ");
    if (batch_count_ > abscissas_.size())
        throw DomainError("sample set: batch count exceeds total count");
    if (batch_count_ != (abscissas_.size() + 1) / 2)
        throw DomainError("sample set: batch must be the odd-numbered half of the grid");
    for (std::size_t i = 1; i < abscissas_.size(); ++i)
        if (!(abscissas_[i] > abscissas_[i - 1]))
            throw DomainError("sample set: abscissas must be strictly increasing");
}

std::vector<std::size_t> SampleSet::batch_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < abscissas_.size(); i += 2)
        out.push_back(i);
    return out;
}

std::vector<std::size_t> SampleSet::incremental_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < abscissas_.size(); i += 2)
        out.push_back(i);
    return out;
}

bool SampleSet::is_batch(std::size_t index) const noexcept
{
    return index % 2 == 0;
}

std::size_t min_batch_samples(const RingGeometry& geom)
{
    const std::size_t rings = geom.ring_count();
    const std::size_t floor_count = rings + 1;
    if (rings < 2)
        return floor_count;
    const double rule = 4.0 * static_cast<double>(rings - 1) * geom.max_ring_spacing() / geom.wavelength();
    // Absorb rounding so that exact products such as 4 * 8 * 0.5 stay exact.
    const auto count = static_cast<std::size_t>(std::ceil(rule - 1e-9));
    return std::max(count, floor_count);
}

std::size_t min_total_samples(const RingGeometry& geom)
{
    return 2 * min_batch_samples(geom);
}

std::size_t planned_batch_samples(const RingGeometry& geom, int sample_multiplier)
{
    if (sample_multiplier < 1)
        throw DomainError("sample multiplier must be >= 1");
    const std::size_t scaled = min_batch_samples(geom) * static_cast<std::size_t>(sample_multiplier);
    return std::max(scaled, geom.basis_size() + 2);
}

SampleSet sample_function(const std::function<double(double)>& fn, std::size_t batch_count)
{
    if (batch_count < 1)
        throw DomainError("sample_function: batch count must be >= 1");
    const std::size_t total = 2 * batch_count;
    std::vector<double> u(total);
    std::vector<double> v(total);
    for (std::size_t m = 0; m < total; ++m) {
        u[m] = (static_cast<double>(m) + 0.5) / static_cast<double>(total);
        v[m] = fn(u[m]);
    }
    return SampleSet(std::move(u), std::move(v), batch_count);
}

SampleSet build_sample_set(const RingGeometry& geom, const TargetPattern& target,
                           int sample_multiplier)
{
    return sample_function([&target](double u) { return target.evaluate(u); },
                           planned_batch_samples(geom, sample_multiplier));
}

namespace {

// Cardinal kernel for an even number of points per period: the Dirichlet
// ratio times cos(psi / 2), which makes it 2*pi periodic and reproduces
// constants exactly.
double even_cardinal_kernel(double psi, KernelOrder order)
{
    const double wrapped = std::remainder(psi, 2.0 * std::numbers::pi);
    return sampling_kernel(wrapped, order) * std::cos(wrapped / 2.0);
}

} // namespace

double reconstruct(const SampleSet& samples, double u)
{
    const auto& us = samples.abscissas();
    const auto& vs = samples.values();
    const KernelOrder order(static_cast<int>(2 * us.size()));
    double sum = 0.0;
    for (std::size_t m = 0; m < us.size(); ++m) {
        const double w = even_cardinal_kernel(std::numbers::pi * (u - us[m]), order) +
                         even_cardinal_kernel(std::numbers::pi * (u + us[m]), order);
        sum += vs[m] * w;
    }
    return sum;
}

void write_samples_csv(std::ostream& out, const SampleSet& samples)
{
    out << "u,value,stage\n";
    char line[96];
    for (std::size_t m = 0; m < samples.total_count(); ++m) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%s\n", samples.abscissas()[m],
                      samples.values()[m], samples.is_batch(m) ? "batch" : "incremental");
        out << line;
    }
}

} // namespace ringsynth
