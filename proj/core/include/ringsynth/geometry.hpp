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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ringsynth {

/// Concentric ring array: ring radii, per-ring element counts and the
/// operating wavelength, with an optional element at the center.
///
/// Immutable once constructed; the constructor rejects non-increasing or
/// non-positive radii, zero element counts and non-positive wavelengths.
/// The wavenumber is always derived from the wavelength.
class RingGeometry {
public:
    RingGeometry(double wavelength, std::vector<double> radii, std::vector<int> elements_per_ring,
                 bool has_center_element = true);

    double wavelength() const noexcept { return wavelength_; }
    double wavenumber() const noexcept;
    const std::vector<double>& radii() const noexcept { return radii_; }
    const std::vector<int>& elements_per_ring() const noexcept { return counts_; }
    bool has_center_element() const noexcept { return center_; }

    std::size_t ring_count() const noexcept { return radii_.size(); }
    // Number of unknown weights: one per ring plus the center element.
    std::size_t basis_size() const noexcept { return radii_.size() + (center_ ? 1 : 0); }
    double max_ring_spacing() const noexcept;
    double aperture_diameter() const noexcept;

    bool operator==(const RingGeometry&) const = default;

private:
    double wavelength_;
    std::vector<double> radii_;
    std::vector<int> counts_;
    bool center_;
};

/// Per-ring excitation weights; every element of a ring shares one weight.
struct Weights {
    std::complex<double> center{0.0, 0.0};
    std::vector<std::complex<double>> rings;

    bool operator==(const Weights&) const = default;
};

/// Element count that realizes a target arc spacing on a ring:
/// round(2 pi r / d), at least one.
int elements_for_spacing(double radius, double target_spacing);

/// Chord distance 2 r sin(pi / N) between adjacent elements of a ring.
double chord_spacing(double radius, int count);

/// Far-field array factor at direction cosine u in [-1, 1].
std::complex<double> array_factor(const RingGeometry& geom, const Weights& w, double u);

/// Rings at r_n = n lambda / 2 with element counts round(2 pi n) and a center element.
RingGeometry uniform_half_wavelength_geometry(int n_rings, double wavelength);

} // namespace ringsynth
