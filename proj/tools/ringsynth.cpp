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

// Command line driver: `ringsynth run <config>` and `ringsynth validate <config>`.
//
// Exit codes: 0 success (including non-convergence, flagged in the report),
// 2 config error, 3 numerical failure.

#include "ringsynth/config.hpp"
#include "ringsynth/errors.hpp"
#include "ringsynth/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void print_diagnostics(const ringsynth::Diagnostics& d)
{
    for (const auto& e : d.errors)
        std::cerr << "error: " << (e.field.empty() ? "" : e.field + ": ") << e.message << "\n";
    for (const auto& w : d.warnings)
        std::cerr << "warning: " << (w.field.empty() ? "" : w.field + ": ") << w.message << "\n";
}

struct RunFlags {
    std::string config;
    std::optional<std::string> out;
    std::optional<int> grid;
    std::optional<int> passes;
    bool surface = false;
    bool quiet = false;
};

int do_validate(const std::string& path, bool quiet)
{
    const auto diag = ringsynth::validate_file(path);
    print_diagnostics(diag);
    if (!diag.ok())
        return kExitConfig;
    if (!quiet)
        std::cout << path << ": ok" << (diag.warnings.empty() ? "" : " (with warnings)") << "\n";
    return 0;
}

int do_run(const RunFlags& flags)
{
    auto parsed = ringsynth::load_config(flags.config);
    if (!parsed.config) {
        print_diagnostics(parsed.diagnostics);
        return kExitConfig;
    }
    ringsynth::SynthesisConfig config = *parsed.config;
    if (flags.out)
        config.output.directory = *flags.out;
    if (flags.grid)
        config.output.grid_points = *flags.grid;
    if (flags.passes)
        config.solver.max_passes = *flags.passes;
    if (flags.surface)
        config.output.surface = true;

    const auto diag = ringsynth::validate_config(config);
    if (!diag.ok() || !flags.quiet)
        print_diagnostics(diag);
    if (!diag.ok())
        return kExitConfig;

    const ringsynth::SynthesisReport report = ringsynth::run_synthesis(config);
    ringsynth::write_outputs(report, config.output.directory);

    for (const auto& w : report.warnings)
        std::cerr << "warning: " << w << "\n";
    if (!flags.quiet) {
        std::printf("%s: %zu rings, M=%zu, M0=%zu, %d pass(es), residual %.3e\n",
                    config.name.empty() ? flags.config.c_str() : config.name.c_str(),
                    report.geometry.ring_count(), report.batch_samples, report.total_samples,
                    report.state.passes_completed, report.state.residual_trace.back());
        if (report.metrics.sll_db)
            std::printf("  SLL %.2f dB\n", *report.metrics.sll_db);
        if (report.metrics.passband_ripple_db)
            std::printf("  passband ripple %.2f dB\n", *report.metrics.passband_ripple_db);
        for (const auto& n : report.metrics.null_depths_db)
            std::printf("  null at u=%.3f: %.2f dB\n", n.u_center, n.depth_db);
        std::printf("  wrote %s (%.3f s)\n", config.output.directory.c_str(), report.wall_time_s);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Concentric ring array pattern synthesis (batch + recursive least squares)"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "Synthesize weights from a config and write the results");
    run->add_option("config", run_flags.config, "Config file (JSON)")->required();
    run->add_option("--out", run_flags.out, "Output directory (overrides output.directory)");
    run->add_option("--grid", run_flags.grid, "Pattern cut points (overrides output.grid_points)");
    run->add_option("--passes", run_flags.passes, "Maximum recursive sweeps (overrides solver.max_passes)");
    run->add_flag("--surface", run_flags.surface, "Also write surface.csv");
    run->add_flag("--quiet", run_flags.quiet, "Only print errors and solver warnings");

    std::string validate_path;
    bool validate_quiet = false;
    auto* validate = app.add_subcommand("validate", "Check a config without running the solver");
    validate->add_option("config", validate_path, "Config file (JSON)")->required();
    validate->add_flag("--quiet", validate_quiet, "Only print diagnostics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*validate)
            return do_validate(validate_path, validate_quiet);
        return do_run(run_flags);
    } catch (const ringsynth::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ringsynth::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
