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

#include "ringsynth/analysis.hpp"

#include "ringsynth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace ringsynth {

namespace {

double to_db(double ratio)
{
    if (!(ratio > 0.0))
        return kDbFloor;
    return std::max(kDbFloor, 20.0 * std::log10(ratio));
}

std::vector<double> magnitudes(const RingGeometry& geom, const Weights& w, const std::vector<double>& u)
{
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = std::abs(array_factor(geom, w, u[i]));
    return out;
}

double peak_of(const std::vector<double>& mags)
{
    const double peak = mags.empty() ? 0.0 : *std::max_element(mags.begin(), mags.end());
    if (!(peak > 0.0))
        throw DegeneratePatternError("pattern is identically zero on the evaluation grid");
    return peak;
}

// Mask of the -3 dB connected regions that contain a near-peak point.
std::vector<bool> beam_regions(const std::vector<double>& db, double peak_tolerance_db)
{
    const std::size_t n = db.size();
    std::vector<bool> mask(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (db[i] < -peak_tolerance_db || mask[i])
            continue;
        std::size_t lo = i;
        while (lo > 0 && db[lo - 1] > -3.0)
            --lo;
        std::size_t hi = i;
        while (hi + 1 < n && db[hi + 1] > -3.0)
            ++hi;
        for (std::size_t j = lo; j <= hi; ++j)
            mask[j] = true;
    }
    return mask;
}

std::size_t count_regions(const std::vector<bool>& mask)
{
    std::size_t regions = 0;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i] && (i == 0 || !mask[i - 1]))
            ++regions;
    return regions;
}

} // namespace

std::vector<double> symmetric_grid(int points)
{
    if (points < 2)
        throw DomainError("grid needs at least two points");
    std::vector<double> u(static_cast<std::size_t>(points));
    const int span = points - 1;
    for (int i = 0; i < points; ++i)
        u[static_cast<std::size_t>(i)] = static_cast<double>(2 * i - span) / span;
    return u;
}

PatternCut evaluate_cut(const RingGeometry& geom, const Weights& w, int grid_points)
{
    if (grid_points < kMinCutPoints)
        throw DomainError("pattern cut needs at least " + std::to_string(kMinCutPoints) + " points");
    PatternCut cut;
    cut.u_grid = symmetric_grid(grid_points);
    const auto mags = magnitudes(geom, w, cut.u_grid);
    const double peak = peak_of(mags);
    cut.amplitude_db.resize(mags.size());
    for (std::size_t i = 0; i < mags.size(); ++i)
        cut.amplitude_db[i] = to_db(mags[i] / peak);
    return cut;
}

double cut_value_at(const PatternCut& cut, double u)
{
    const auto& g = cut.u_grid;
    if (u <= g.front())
        return cut.amplitude_db.front();
    if (u >= g.back())
        return cut.amplitude_db.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), u) - g.begin());
    const auto lo = hi - 1;
    const double t = (u - g[lo]) / (g[hi] - g[lo]);
    return cut.amplitude_db[lo] + t * (cut.amplitude_db[hi] - cut.amplitude_db[lo]);
}

double max_level_in_band(const PatternCut& cut, double lo, double hi)
{
    double level = kDbFloor;
    bool any = false;
    for (std::size_t i = 0; i < cut.u_grid.size(); ++i) {
        const double a = std::fabs(cut.u_grid[i]);
        if (a >= lo && a <= hi) {
            level = any ? std::max(level, cut.amplitude_db[i]) : cut.amplitude_db[i];
            any = true;
        }
    }
    if (!any)
        throw DomainError("band contains no grid points");
    return level;
}

double ripple_in_band(const PatternCut& cut, double limit)
{
    double lo = 0.0;
    double hi = kDbFloor;
    bool any = false;
    for (std::size_t i = 0; i < cut.u_grid.size(); ++i) {
        if (std::fabs(cut.u_grid[i]) > limit)
            continue;
        const double v = cut.amplitude_db[i];
        lo = any ? std::min(lo, v) : v;
        hi = any ? std::max(hi, v) : v;
        any = true;
    }
    if (!any)
        throw DomainError("band contains no grid points");
    return hi - lo;
}

PatternMetrics measure_metrics(const PatternCut& cut, const TargetPattern& target,
                               const MetricsOptions& options)
{
    const auto& u = cut.u_grid;
    const auto& db = cut.amplitude_db;
    const std::size_t n = u.size();
    if (n < 3 || db.size() != n)
        throw DomainError("measure_metrics: malformed cut");

    std::vector<double> tgt(n);
    for (std::size_t i = 0; i < n; ++i)
        tgt[i] = target.evaluate(u[i]);

    const std::vector<bool> beam = beam_regions(db, options.peak_tolerance_db);
    std::vector<bool> main = beam;
    if (target.kind() == TargetKind::flat_top)
        for (std::size_t i = 0; i < n; ++i)
            main[i] = tgt[i] > 0.5;

    PatternMetrics metrics;

    for (std::size_t i = 0; i < n; ++i) {
        if (main[i])
            continue;
        bool is_max;
        if (i == 0)
            is_max = db[0] > db[1];
        else if (i == n - 1)
            is_max = db[i] > db[i - 1];
        else
            is_max = db[i] > db[i - 1] && db[i] >= db[i + 1];
        if (is_max)
            metrics.sll_db = metrics.sll_db ? std::max(*metrics.sll_db, db[i]) : db[i];
    }

    // Flat region of the target, shrunk by the guard distance.
    std::vector<double> unflat;
    for (std::size_t i = 0; i < n; ++i)
        if (tgt[i] < 0.999)
            unflat.push_back(u[i]);
    std::optional<double> ripple_lo;
    std::optional<double> ripple_hi;
    for (std::size_t i = 0; i < n; ++i) {
        if (tgt[i] < 0.999)
            continue;
        bool guarded = true;
        for (double x : unflat)
            if (std::fabs(x - u[i]) < options.ripple_guard) {
                guarded = false;
                break;
            }
        if (!guarded)
            continue;
        ripple_lo = ripple_lo ? std::min(*ripple_lo, db[i]) : db[i];
        ripple_hi = ripple_hi ? std::max(*ripple_hi, db[i]) : db[i];
    }
    if (ripple_lo)
        metrics.passband_ripple_db = *ripple_hi - *ripple_lo;

    if (const auto& nulls = target.nulls())
        for (double c : nulls->centers)
            metrics.null_depths_db.push_back({c, cut_value_at(cut, c)});

    if (count_regions(beam) == 1) {
        std::size_t first = n;
        std::size_t last = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (beam[i]) {
                first = std::min(first, i);
                last = i;
            }
        metrics.hpbw_u = u[last] - u[first];
    }

    double sum_sq = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(tgt[i] > 1e-4))
            continue;
        const double err = db[i] - to_db(tgt[i]);
        sum_sq += err * err;
        ++used;
    }
    metrics.rms_error_vs_target_db = used ? std::sqrt(sum_sq / static_cast<double>(used)) : 0.0;
    return metrics;
}

PatternSurface evaluate_surface(const RingGeometry& geom, const Weights& w, int theta_points,
                                int phi_points, int grid_points)
{
    if (theta_points < 2 || phi_points < 1)
        throw DomainError("surface needs >= 2 theta points and >= 1 phi point");
    if (grid_points < kMinCutPoints)
        throw DomainError("surface reference cut needs at least " + std::to_string(kMinCutPoints) +
                          " points");
    const double peak = peak_of(magnitudes(geom, w, symmetric_grid(grid_points)));

    PatternSurface s;
    for (int i = 0; i < theta_points; ++i)
        s.theta.push_back(std::numbers::pi / 2.0 * i / (theta_points - 1));
    s.theta.back() = std::numbers::pi / 2.0;
    for (int j = 0; j < phi_points; ++j)
        s.phi.push_back(2.0 * std::numbers::pi * j / phi_points);

    for (double theta : s.theta) {
        const double u = std::min(1.0, std::sin(theta));
        const double level = to_db(std::abs(array_factor(geom, w, u)) / peak);
        s.db.emplace_back(s.phi.size(), level);
    }
    return s;
}

void write_cut_csv(std::ostream& out, const PatternCut& cut, const TargetPattern* target)
{
    out << (target ? "u,dB,target_dB\n" : "u,dB\n");
    char line[96];
    for (std::size_t i = 0; i < cut.u_grid.size(); ++i) {
        if (target)
            std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f\n", cut.u_grid[i], cut.amplitude_db[i],
                          to_db(target->evaluate(cut.u_grid[i])));
        else
            std::snprintf(line, sizeof line, "%.6f,%.6f\n", cut.u_grid[i], cut.amplitude_db[i]);
        out << line;
    }
}

void write_surface_csv(std::ostream& out, const PatternSurface& surface)
{
    out << "theta,phi,dB\n";
    char line[96];
    for (std::size_t i = 0; i < surface.theta.size(); ++i)
        for (std::size_t j = 0; j < surface.phi.size(); ++j) {
            std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f\n", surface.theta[i], surface.phi[j],
                          surface.db[i][j]);
            out << line;
        }
}

} // namespace ringsynth
