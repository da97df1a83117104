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
#include "ringsynth/sampling.hpp"
#include "ringsynth/targets.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ringsynth {

/// Rows are samples; columns are the rings in order followed by the center
/// element (when present). Entry (m, n) = N_n J0(k r_n u_m), center column 1.
struct DesignMatrix {
    Eigen::MatrixXd entries;
    std::vector<std::string> column_labels;

    Eigen::Index rows() const noexcept { return entries.rows(); }
    Eigen::Index cols() const noexcept { return entries.cols(); }
};

DesignMatrix build_design_matrix(const RingGeometry& geom, std::span<const double> abscissas);

struct BatchSolution {
    Eigen::VectorXd coefficients;
    Eigen::MatrixXd inv_gramian; // (A^T A)^-1
    double condition_estimate = 0.0;
};

// Condition estimate above which the design matrix is treated as singular.
inline constexpr double kSingularCondition = 1e12;

/// Least-squares minimizer of ||A x - b|| by column-pivoted QR. The inverse
/// Gramian comes from the triangular factor, never from forming A^T A.
/// Throws SingularityError naming the most dependent column.
BatchSolution solve_batch(const DesignMatrix& matrix, const Eigen::VectorXd& rhs);

/// Recursion state: current coefficients (solver column order) and the
/// inverse Gramian of every row absorbed so far.
struct SolverState {
    Eigen::VectorXd estimate;
    Eigen::MatrixXd inv_gramian;
    std::size_t samples_absorbed = 0;
    int passes_completed = 0;
    // Residual norm over the whole sample set: entry 0 after the batch
    // stage, then one entry per completed sweep.
    std::vector<double> residual_trace;
    // Relative coefficient change produced by each sweep.
    std::vector<double> estimate_change;
    bool converged = false;
    double condition_estimate = 0.0;
};

/// Rank-one update with one new equation row . x = rhs_value:
/// K = P a / (a^T P a + 1), x += K (b - a^T x), P -= K a^T P, then P is
/// re-symmetrized. An all-zero row carries no information and leaves the
/// state untouched.
SolverState rls_absorb(SolverState state, const Eigen::VectorXd& row, double rhs_value);

struct SynthesisOptions {
    int max_passes = 3;
    double tolerance = 1e-6;
    int sample_multiplier = 1;
};

struct SynthesisResult {
    Weights weights;
    SolverState state;
    SampleSet samples;
};

/// Batch solve on the batch samples, then up to max_passes recursive sweeps
/// over the incremental samples.
///
/// The first sweep absorbs the incremental rows into the batch seed. Later
/// sweeps are refinement passes: the residual over all samples is pushed
/// through the same batch-then-recursive pipeline and the resulting
/// correction added, which leaves the exact least-squares solution fixed
/// and only removes accumulated rounding. Stops once a sweep changes the
/// estimate by no more than tolerance (relative); `state.converged` reports
/// whether that happened.
SynthesisResult synthesize(const RingGeometry& geom, const TargetPattern& target,
                           const SynthesisOptions& options = {});

/// Same pipeline against an arbitrary real function of u, used when the
/// desired samples do not come from a normalized TargetPattern.
SynthesisResult synthesize(const RingGeometry& geom, const std::function<double(double)>& target,
                           const SynthesisOptions& options = {});

Weights weights_from_coefficients(const RingGeometry& geom, const Eigen::VectorXd& coefficients);
Eigen::VectorXd coefficients_from_weights(const RingGeometry& geom, const Weights& w);

double residual_norm(const DesignMatrix& matrix, const Eigen::VectorXd& coefficients,
                     const Eigen::VectorXd& rhs);

} // namespace ringsynth
