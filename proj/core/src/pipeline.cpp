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

#include "ringsynth/pipeline.hpp"

#include "ringsynth/errors.hpp"
#include "ringsynth/sampling.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ringsynth {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out << text;
}

std::string weights_csv(const SynthesisReport& r)
{
    std::string out = "ring_index,radius,count,re,im,magnitude,normalized_magnitude\n";
    char line[256];
    std::size_t slot = 0;
    auto emit = [&](std::size_t index, double radius, int count, std::complex<double> w) {
        std::snprintf(line, sizeof line, "%zu,%.12g,%d,%.17g,%.17g,%.17g,%.17g\n", index, radius, count,
                      w.real(), w.imag(), std::abs(w), r.normalized_magnitudes[slot++]);
        out += line;
    };
    if (r.geometry.has_center_element())
        emit(0, 0.0, 1, r.weights.center);
    for (std::size_t n = 0; n < r.geometry.ring_count(); ++n)
        emit(n + 1, r.geometry.radii()[n], r.geometry.elements_per_ring()[n], r.weights.rings[n]);
    return out;
}

} // namespace

SynthesisReport run_synthesis(const SynthesisConfig& config)
{
    const auto started = std::chrono::steady_clock::now();

    RingGeometry geom = make_geometry(config.geometry);
    const TargetPattern target = make_target(config.target);

    SynthesisOptions options;
    options.max_passes = config.solver.max_passes;
    options.tolerance = config.solver.tolerance;
    options.sample_multiplier = config.solver.sample_multiplier;
    SynthesisResult result = synthesize(geom, target, options);

    SynthesisReport report{config, geom, result.weights, {}, {}, std::move(result.state)};
    report.batch_samples = result.samples.batch_count();
    report.total_samples = result.samples.total_count();
    report.rule_batch_samples = min_batch_samples(geom);
    report.rule_total_samples = min_total_samples(geom);

    std::vector<double> mags;
    if (geom.has_center_element())
        mags.push_back(std::abs(report.weights.center));
    for (const auto& w : report.weights.rings)
        mags.push_back(std::abs(w));
    double largest = 0.0;
    for (double m : mags)
        largest = std::max(largest, m);
    for (double m : mags)
        report.normalized_magnitudes.push_back(largest > 0.0 ? m / largest : 0.0);

    report.cut = evaluate_cut(geom, report.weights, config.output.grid_points);
    report.metrics = measure_metrics(report.cut, target);
    if (config.output.surface)
        report.surface = evaluate_surface(geom, report.weights, config.output.theta_points,
                                          config.output.phi_points, config.output.grid_points);

    if (!report.state.converged) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "solver did not reach tolerance %.3g within %d passes", options.tolerance,
                      options.max_passes);
        report.warnings.emplace_back(buf);
    }

    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string report_to_json(const SynthesisReport& r)
{
    json doc;
    doc["name"] = r.config.name;
    doc["config"] = json::parse(config_to_json(r.config));

    doc["geometry"] = {{"wavelength", r.geometry.wavelength()},
                       {"radii", r.geometry.radii()},
                       {"counts", r.geometry.elements_per_ring()},
                       {"center_element", r.geometry.has_center_element()}};

    doc["samples"] = {{"batch", r.batch_samples},
                      {"total", r.total_samples},
                      {"rule_batch", r.rule_batch_samples},
                      {"rule_total", r.rule_total_samples}};

    doc["solver"] = {{"passes_completed", r.state.passes_completed},
                     {"converged", r.state.converged},
                     {"samples_absorbed", r.state.samples_absorbed},
                     {"condition_estimate", r.state.condition_estimate},
                     {"residual_trace", r.state.residual_trace},
                     {"estimate_change", r.state.estimate_change}};

    json weights = json::array();
    std::size_t slot = 0;
    auto add = [&](std::size_t index, std::complex<double> w) {
        weights.push_back({{"ring_index", index},
                           {"re", w.real()},
                           {"im", w.imag()},
                           {"magnitude", std::abs(w)},
                           {"normalized_magnitude", r.normalized_magnitudes[slot++]}});
    };
    if (r.geometry.has_center_element())
        add(0, r.weights.center);
    for (std::size_t n = 0; n < r.weights.rings.size(); ++n)
        add(n + 1, r.weights.rings[n]);
    doc["weights"] = weights;

    json nulls = json::array();
    for (const auto& n : r.metrics.null_depths_db)
        nulls.push_back({{"u", n.u_center}, {"depth_db", n.depth_db}});
    doc["metrics"] = {{"sll_db", optional_number(r.metrics.sll_db)},
                      {"passband_ripple_db", optional_number(r.metrics.passband_ripple_db)},
                      {"null_depths", nulls},
                      {"hpbw_u", optional_number(r.metrics.hpbw_u)},
                      {"rms_error_vs_target_db", r.metrics.rms_error_vs_target_db}};
    doc["warnings"] = r.warnings;
    return doc.dump(2) + "\n";
}

void write_outputs(const SynthesisReport& report, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    write_text(dir / "weights.csv", weights_csv(report));

    const TargetPattern target = make_target(report.config.target);
    std::ostringstream cut;
    write_cut_csv(cut, report.cut, &target);
    write_text(dir / "cut.csv", cut.str());

    if (report.surface) {
        std::ostringstream surface;
        write_surface_csv(surface, *report.surface);
        write_text(dir / "surface.csv", surface.str());
    }
    write_text(dir / "report.json", report_to_json(report));
}

} // namespace ringsynth
