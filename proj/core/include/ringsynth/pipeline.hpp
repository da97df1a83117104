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

#include "ringsynth/analysis.hpp"
#include "ringsynth/config.hpp"
#include "ringsynth/geometry.hpp"
#include "ringsynth/solver.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ringsynth {

struct SynthesisReport {
    SynthesisConfig config;
    RingGeometry geometry;
    Weights weights;
    std::vector<double> normalized_magnitudes; // center first (when present), then rings
    PatternMetrics metrics;
    SolverState state;
    std::size_t batch_samples = 0;
    std::size_t total_samples = 0;
    std::size_t rule_batch_samples = 0; // sample-count rule before multiplier and floor
    std::size_t rule_total_samples = 0;
    PatternCut cut;
    std::optional<PatternSurface> surface;
    std::vector<std::string> warnings;
    double wall_time_s = 0.0; // not written to disk; output files stay reproducible
};

/// Runs one synthesis end to end without touching the filesystem (other
/// than reading a tabulated target). Numerical failures propagate as
/// SingularityError / DegeneratePatternError.
SynthesisReport run_synthesis(const SynthesisConfig& config);

/// Writes weights.csv, cut.csv, report.json and, when the surface was
/// computed, surface.csv into dir (created if needed).
void write_outputs(const SynthesisReport& report, const std::filesystem::path& dir);

std::string report_to_json(const SynthesisReport& report);

} // namespace ringsynth
