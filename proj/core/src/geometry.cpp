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

#include "ringsynth/geometry.hpp"

#include "ringsynth/errors.hpp"
#include "ringsynth/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ringsynth {

RingGeometry::RingGeometry(double wavelength, std::vector<double> radii,
                           std::vector<int> elements_per_ring, bool has_center_element)
    : wavelength_(wavelength), radii_(std::move(radii)), counts_(std::move(elements_per_ring)),
      center_(has_center_element)
{
    if (!(wavelength_ > 0.0) || !std::isfinite(wavelength_))
        throw DomainError("wavelength must be positive and finite");
    if (radii_.size() != counts_.size())
        throw DomainError("radii and element counts differ in length (" +
                          std::to_string(radii_.size()) + " vs " + std::to_string(counts_.size()) + ")");
    for (std::size_t n = 0; n < radii_.size(); ++n) {
        if (!(radii_[n] > 0.0) || !std::isfinite(radii_[n]))
            throw DomainError("ring " + std::to_string(n + 1) + ": radius must be positive");
        if (n > 0 && !(radii_[n] > radii_[n - 1]))
            throw DomainError("ring " + std::to_string(n + 1) + ": radii must be strictly increasing");
        if (counts_[n] < 1)
            throw DomainError("ring " + std::to_string(n + 1) + ": element count must be >= 1");
    }
    if (radii_.empty() && !center_)
        throw DomainError("geometry has no rings and no center element");
}

double RingGeometry::wavenumber() const noexcept
{
    return 2.0 * std::numbers::pi / wavelength_;
}

double RingGeometry::max_ring_spacing() const noexcept
{
    double spacing = 0.0;
    for (std::size_t n = 1; n < radii_.size(); ++n)
        spacing = std::max(spacing, radii_[n] - radii_[n - 1]);
    return spacing;
}

double RingGeometry::aperture_diameter() const noexcept
{
    return radii_.empty() ? 0.0 : 2.0 * radii_.back();
}

int elements_for_spacing(double radius, double target_spacing)
{
    if (!(radius > 0.0) || !(target_spacing > 0.0))
        throw DomainError("elements_for_spacing: radius and spacing must be positive");
    const double count = std::round(2.0 * std::numbers::pi * radius / target_spacing);
    return std::max(1, static_cast<int>(count));
}

double chord_spacing(double radius, int count)
{
    if (!(radius > 0.0))
        throw DomainError("chord_spacing: radius must be positive");
    if (count < 2)
        throw DomainError("chord_spacing: chord undefined for fewer than two elements");
    return 2.0 * radius * std::sin(std::numbers::pi / count);
}

std::complex<double> array_factor(const RingGeometry& geom, const Weights& w, double u)
{
    if (!(std::fabs(u) <= 1.0))
        throw DomainError("array_factor: |u| must not exceed 1");
    if (w.rings.size() != geom.ring_count())
        throw DomainError("array_factor: weight count does not match ring count");

    const double k = geom.wavenumber();
    std::complex<double> f = geom.has_center_element() ? w.center : std::complex<double>{};
    const auto& radii = geom.radii();
    const auto& counts = geom.elements_per_ring();
    for (std::size_t n = 0; n < radii.size(); ++n)
        f += w.rings[n] * (counts[n] * bessel_j0(k * radii[n] * u));
    return f;
}

RingGeometry uniform_half_wavelength_geometry(int n_rings, double wavelength)
{
    if (n_rings < 1)
        throw DomainError("uniform_half_wavelength_geometry: need at least one ring");
    std::vector<double> radii;
    std::vector<int> counts;
    for (int n = 1; n <= n_rings; ++n) {
        const double r = n * wavelength / 2.0;
        radii.push_back(r);
        counts.push_back(elements_for_spacing(r, wavelength / 2.0));
    }
    return RingGeometry(wavelength, std::move(radii), std::move(counts), true);
}

} // namespace ringsynth
