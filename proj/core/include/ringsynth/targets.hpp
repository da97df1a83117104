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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ringsynth {

enum class TargetKind { flat_top, equi_ripple, difference, equi_ripple_with_nulls, tabulated };

std::string_view to_string(TargetKind kind);

struct FlatTopParams {
    double passband_edge = 0.0;
    double transition_width = 0.0;
};

struct EquiRippleParams {
    double sll_db = 0.0;
    int aperture_rings = 0;
};

struct DifferenceParams {
    double sll_db = 0.0;
    int aperture_rings = 0;
    // Main-to-ripple ratio of the underlying Chebyshev factor, solved so the
    // sidelobes of the finished pattern sit at sll_db.
    double chebyshev_ratio = 1.0;
};

struct TablePoint {
    double u = 0.0;
    double amplitude = 0.0;
};

struct TableParams {
    std::vector<TablePoint> points; // as supplied, before normalization
};

// Notches applied on top of a base pattern. width is the half-width of each
// notch: outside (center - width, center + width) the base is untouched.
struct NullSpec {
    std::vector<double> centers;
    double depth_db = 0.0;
    double width = 0.0;
};

using TargetParams = std::variant<FlatTopParams, EquiRippleParams, DifferenceParams, TableParams>;

/// Desired far-field magnitude over u in [-1, 1], peak-normalized to 1.
class TargetPattern {
public:
    TargetKind kind() const noexcept { return kind_; }
    const TargetParams& params() const noexcept { return params_; }
    const std::optional<NullSpec>& nulls() const noexcept { return nulls_; }

    // Sidelobe level the pattern was designed for, if it has one.
    std::optional<double> design_sll_db() const;

    double evaluate(double u) const;
    double operator()(double u) const { return evaluate(u); }

private:
    friend TargetPattern flat_top(double, double);
    friend TargetPattern equi_ripple(double, int);
    friend TargetPattern difference(double, int);
    friend TargetPattern with_nulls(const TargetPattern&, const std::vector<double>&, double, double);
    friend TargetPattern from_table(const std::vector<TablePoint>&);

    TargetPattern(TargetKind kind, TargetParams params, std::function<double(double)> fn)
        : kind_(kind), params_(std::move(params)), fn_(std::move(fn)) {}

    TargetKind kind_;
    TargetParams params_;
    std::optional<NullSpec> nulls_;
    std::function<double(double)> fn_;
};

/// 1 for |u| <= edge, raised-cosine rolloff across the transition, 0 beyond.
TargetPattern flat_top(double passband_edge, double transition_width);

/// Chebyshev pencil beam peaked at u = 0 with every sidelobe at sll_db.
///
/// The pattern is that of an equivalent half-wavelength-spaced linear
/// aperture of diameter aperture_rings * lambda, i.e. the diameter of a ring
/// array with aperture_rings rings at lambda / 2 pitch.
TargetPattern equi_ripple(double sll_db, int aperture_rings);

/// Difference pattern: zero at boresight, twin main lobes, sidelobes at
/// sll_db below the lobe peak. Built as sin^2(pi u / 2) times a Chebyshev
/// factor whose ratio is solved numerically for the requested level; the
/// quadratic boresight null is one an even ring pattern can follow.
TargetPattern difference(double sll_db, int aperture_rings);

/// Multiplies base by smooth notches that bring the amplitude down to
/// 10^(depth_db / 20) at each center.
TargetPattern with_nulls(const TargetPattern& base, const std::vector<double>& null_centers,
                         double null_depth_db, double null_width);

/// Linear interpolation through (u, amplitude) points with constant
/// extrapolation, normalized to the largest amplitude.
TargetPattern from_table(const std::vector<TablePoint>& samples);

/// Two-column "u,amplitude" text, optional header line. Throws FormatError
/// naming the offending line.
std::vector<TablePoint> parse_table_csv(std::string_view text);
std::vector<TablePoint> read_table_csv(const std::filesystem::path& path);

namespace detail {

struct Extremum {
    double u;
    double value;
};

// Local maxima of fn on [lo, hi], located on an n-point scan and polished
// by golden-section search. Endpoints count when the function rises into them.
std::vector<Extremum> local_maxima(const std::function<double(double)>& fn, double lo, double hi,
                                   int n);

double chebyshev(int order, double x);

} // namespace detail

} // namespace ringsynth
