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

#include "ringsynth/geometry.hpp"
#include "ringsynth/targets.hpp"

#include <cstddef>
#include <functional>
#include <ostream>
#include <vector>

namespace ringsynth {

/// Target samples on the midpoint grid u_m = (m - 1/2) / M0 over [0, 1].
///
/// The batch stage uses the odd-numbered points (1st, 3rd, ...), the
/// recursive stage the interleaved even-numbered ones.
class SampleSet {
public:
    SampleSet(std::vector<double> abscissas, std::vector<double> values, std::size_t batch_count);

    const std::vector<double>& abscissas() const noexcept { return abscissas_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t batch_count() const noexcept { return batch_count_; }
    std::size_t total_count() const noexcept { return abscissas_.size(); }

    std::vector<std::size_t> batch_indices() const;
    std::vector<std::size_t> incremental_indices() const;
    bool is_batch(std::size_t index) const noexcept;

private:
    std::vector<double> abscissas_;
    std::vector<double> values_;
    std::size_t batch_count_;
};

/// ceil(4 (N_r - 1) max_spacing / lambda), never below N_r + 1.
std::size_t min_batch_samples(const RingGeometry& geom);

/// Twice min_batch_samples.
std::size_t min_total_samples(const RingGeometry& geom);

/// Batch size actually used: min_batch_samples times the multiplier, raised
/// to basis_size + 2 so the first stage is strictly overdetermined.
std::size_t planned_batch_samples(const RingGeometry& geom, int sample_multiplier = 1);

/// Samples fn on a 2 * batch_count midpoint grid.
SampleSet sample_function(const std::function<double(double)>& fn, std::size_t batch_count);

SampleSet build_sample_set(const RingGeometry& geom, const TargetPattern& target,
                           int sample_multiplier = 1);

/// Periodic interpolation of the samples at any u in [-1, 1].
///
/// The samples are mirrored to -u_m (the array factor is even), giving 2 M0
/// uniform points over one period of psi = pi u, and summed against the
/// even-order trigonometric cardinal kernel.
double reconstruct(const SampleSet& samples, double u);

/// Rows of "u,value,stage" with stage either batch or incremental.
void write_samples_csv(std::ostream& out, const SampleSet& samples);

} // namespace ringsynth
