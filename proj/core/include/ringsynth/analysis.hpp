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

#include <optional>
#include <ostream>
#include <vector>

namespace ringsynth {

inline constexpr double kDbFloor = -200.0;
inline constexpr int kMinCutPoints = 801;

/// |F(u)| in dB on a uniform grid over [-1, 1], 0 dB at the grid peak.
struct PatternCut {
    std::vector<double> u_grid;
    std::vector<double> amplitude_db;
};

struct NullDepth {
    double u_center = 0.0;
    double depth_db = 0.0;
};

struct PatternMetrics {
    std::optional<double> sll_db;
    std::optional<double> passband_ripple_db;
    std::vector<NullDepth> null_depths_db;
    std::optional<double> hpbw_u;
    double rms_error_vs_target_db = 0.0;
};

struct MetricsOptions {
    // Ripple is measured where the target is flat (>= 0.999) and at least this
    // far in u from any point where it is not.
    double ripple_guard = 0.05;
    // Grid points within this many dB of the peak seed main-lobe regions.
    double peak_tolerance_db = 0.01;
};

/// Symmetric grid u_i = (2i - (n - 1)) / (n - 1), so u_{n-1-i} == -u_i exactly.
std::vector<double> symmetric_grid(int points);

/// Throws DegeneratePatternError when the pattern vanishes on the grid.
PatternCut evaluate_cut(const RingGeometry& geom, const Weights& w, int grid_points = 2001);

/// Sidelobe level, passband ripple, null depths, beamwidth and dB error of a
/// cut against the target it was synthesized for.
///
/// Main lobes are the -3 dB connected regions around the peak; for flat-top
/// targets the main region is wherever the target exceeds 0.5. The SLL is
/// the highest local maximum outside the main region.
PatternMetrics measure_metrics(const PatternCut& cut, const TargetPattern& target,
                               const MetricsOptions& options = {});

/// Pattern value interpolated linearly in dB at u.
double cut_value_at(const PatternCut& cut, double u);

/// Largest cut level over the points with lo <= |u| <= hi.
double max_level_in_band(const PatternCut& cut, double lo, double hi);
/// Max minus min of the cut over |u| <= limit.
double ripple_in_band(const PatternCut& cut, double limit);

/// theta x phi grid of |F(sin theta)| in dB for the upper hemisphere.
struct PatternSurface {
    std::vector<double> theta;
    std::vector<double> phi;
    std::vector<std::vector<double>> db; // [theta][phi]
};

/// Normalized against the peak of the grid_points cut so the two outputs
/// share one reference. The pattern has no azimuth dependence.
PatternSurface evaluate_surface(const RingGeometry& geom, const Weights& w, int theta_points,
                                int phi_points, int grid_points = 2001);

void write_cut_csv(std::ostream& out, const PatternCut& cut, const TargetPattern* target = nullptr);
void write_surface_csv(std::ostream& out, const PatternSurface& surface);

} // namespace ringsynth
