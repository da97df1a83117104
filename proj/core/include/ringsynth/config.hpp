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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ringsynth {

// Exactly one of the two forms is set: explicit radii (counts optional,
// derived from element_spacing when absent) or n_rings with a ring pitch.
struct GeometryConfig {
    double wavelength = 1.0;
    bool center_element = true;
    std::optional<std::vector<double>> radii;
    std::optional<std::vector<int>> counts;
    std::optional<int> n_rings;
    std::optional<double> ring_spacing;    // default lambda / 2
    std::optional<double> element_spacing; // default lambda / 2
};

struct NullsConfig {
    std::vector<double> centers;
    double depth_db = -40.0;
    double width = 0.05;
};

struct TargetConfig {
    TargetKind kind = TargetKind::flat_top;
    double passband_edge = 0.0;
    double transition_width = 0.0;
    double sll_db = 0.0;
    int aperture_rings = 0;
    std::string table_file; // resolved against the config file's directory
    std::optional<NullsConfig> nulls;
};

struct SolverConfig {
    int max_passes = 3;
    double tolerance = 1e-6;
    int sample_multiplier = 1;
};

struct OutputConfig {
    std::string directory = "ringsynth-out";
    int grid_points = 2001;
    bool surface = false;
    int theta_points = 91;
    int phi_points = 72;
};

struct SynthesisConfig {
    std::string name;
    std::string description;
    GeometryConfig geometry;
    TargetConfig target;
    SolverConfig solver;
    OutputConfig output;
};

struct Diagnostic {
    std::string field;
    std::string message;
};

struct Diagnostics {
    std::vector<Diagnostic> errors;
    std::vector<Diagnostic> warnings;

    bool ok() const noexcept { return errors.empty(); }
    void merge(const Diagnostics& other);
};

struct ParsedConfig {
    std::optional<SynthesisConfig> config;
    Diagnostics diagnostics;
};

/// Schema check of a JSON config document. Relative table paths resolve
/// against base_dir. Unknown keys are errors.
ParsedConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads and parses a config file; an unreadable file is reported as an error.
ParsedConfig load_config(const std::filesystem::path& path);

/// Semantic checks: the geometry and target must be constructible. Adds
/// feasibility warnings when the target asks for finer detail than the
/// aperture resolves.
Diagnostics validate_config(const SynthesisConfig& config);

/// Full check of a config file: schema plus semantics.
Diagnostics validate_file(const std::filesystem::path& path);

RingGeometry make_geometry(const GeometryConfig& config);
TargetPattern make_target(const TargetConfig& config);

/// Canonical JSON for config with every default made explicit; parsing it
/// back yields the same config.
std::string config_to_json(const SynthesisConfig& config);

} // namespace ringsynth
