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

#include "ringsynth/solver.hpp"

#include "ringsynth/errors.hpp"
#include "ringsynth/specialfn.hpp"

#include <cmath>
#include <limits>

namespace ringsynth {

namespace {

// Column-pivoted QR of the batch rows, kept so refinement sweeps can reuse it.
class BatchFactorization {
public:
    explicit BatchFactorization(const DesignMatrix& matrix) : qr_(matrix.entries)
    {
        const Eigen::Index n = matrix.cols();
        if (matrix.rows() < n)
            throw DomainError("solve_batch: fewer rows than columns (" + std::to_string(matrix.rows()) +
                              " < " + std::to_string(n) + ")");

        const auto diag = qr_.matrixQR().diagonal().head(n).cwiseAbs();
        const double largest = diag.maxCoeff();
        const double smallest = diag.minCoeff();
        condition_ = smallest > 0.0 ? largest / smallest : std::numeric_limits<double>::infinity();
        if (!(condition_ <= kSingularCondition)) {
            const auto column = static_cast<std::size_t>(qr_.colsPermutation().indices()(n - 1));
            const std::string label = column < matrix.column_labels.size()
                                          ? " (" + matrix.column_labels[column] + ")"
                                          : std::string{};
            throw SingularityError("design matrix is numerically rank deficient: column " +
                                       std::to_string(column) + label + " is dependent on the others",
                                   column, condition_);
        }

        const Eigen::MatrixXd r = qr_.matrixR().topLeftCorner(n, n).triangularView<Eigen::Upper>();
        const Eigen::MatrixXd r_inv =
            r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
        const auto& perm = qr_.colsPermutation();
        Eigen::MatrixXd p = perm * (r_inv * r_inv.transpose()) * perm.transpose();
        inv_gramian_ = 0.5 * (p + p.transpose());
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return qr_.solve(rhs); }
    const Eigen::MatrixXd& inv_gramian() const noexcept { return inv_gramian_; }
    double condition() const noexcept { return condition_; }

private:
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
    Eigen::MatrixXd inv_gramian_;
    double condition_ = 0.0;
};

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<std::size_t>& rows)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
    return out;
}

Eigen::VectorXd select_rows(const Eigen::VectorXd& v, const std::vector<std::size_t>& rows)
{
    Eigen::VectorXd out(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = v(static_cast<Eigen::Index>(rows[i]));
    return out;
}

double relative_change(const Eigen::VectorXd& before, const Eigen::VectorXd& after)
{
    const double delta = (after - before).norm();
    const double scale = before.norm();
    return scale > 0.0 ? delta / scale : delta;
}

} // namespace

DesignMatrix build_design_matrix(const RingGeometry& geom, std::span<const double> abscissas)
{
    if (abscissas.empty())
        throw DomainError("build_design_matrix: no sample abscissas");
    const auto rows = static_cast<Eigen::Index>(abscissas.size());
    const auto rings = static_cast<Eigen::Index>(geom.ring_count());
    const auto cols = static_cast<Eigen::Index>(geom.basis_size());
    const double k = geom.wavenumber();

    DesignMatrix out;
    out.entries.resize(rows, cols);
    for (Eigen::Index m = 0; m < rows; ++m) {
        const double u = abscissas[static_cast<std::size_t>(m)];
        for (Eigen::Index n = 0; n < rings; ++n) {
            const auto idx = static_cast<std::size_t>(n);
            out.entries(m, n) = geom.elements_per_ring()[idx] * bessel_j0(k * geom.radii()[idx] * u);
        }
        if (geom.has_center_element())
            out.entries(m, rings) = 1.0;
    }
    for (Eigen::Index n = 0; n < rings; ++n)
        out.column_labels.push_back("ring " + std::to_string(n + 1));
    if (geom.has_center_element())
        out.column_labels.emplace_back("center element");
    return out;
}

BatchSolution solve_batch(const DesignMatrix& matrix, const Eigen::VectorXd& rhs)
{
    if (rhs.size() != matrix.rows())
        throw DomainError("solve_batch: right-hand side length does not match row count");
    const BatchFactorization factor(matrix);
    return {factor.solve(rhs), factor.inv_gramian(), factor.condition()};
}

SolverState rls_absorb(SolverState state, const Eigen::VectorXd& row, double rhs_value)
{
    const Eigen::Index n = state.inv_gramian.rows();
    if (row.size() != n || state.estimate.size() != n)
        throw DomainError("rls_absorb: row length does not match the state dimension");
    if (!row.allFinite() || !std::isfinite(rhs_value))
        throw DomainError("rls_absorb: non-finite row or right-hand side");
    if (row.isZero(0.0))
        return state;

    const Eigen::VectorXd pa = state.inv_gramian * row;
    const double denom = row.dot(pa) + 1.0;
    const Eigen::VectorXd gain = pa / denom;
    const double innovation = rhs_value - row.dot(state.estimate);

    state.estimate += gain * innovation;
    state.inv_gramian -= gain * pa.transpose();
    state.inv_gramian = (0.5 * (state.inv_gramian + state.inv_gramian.transpose())).eval();
    ++state.samples_absorbed;
    return state;
}

Weights weights_from_coefficients(const RingGeometry& geom, const Eigen::VectorXd& coefficients)
{
    if (coefficients.size() != static_cast<Eigen::Index>(geom.basis_size()))
        throw DomainError("coefficient count does not match the geometry");
    Weights w;
    const auto rings = static_cast<Eigen::Index>(geom.ring_count());
    for (Eigen::Index n = 0; n < rings; ++n)
        w.rings.emplace_back(coefficients(n), 0.0);
    if (geom.has_center_element())
        w.center = {coefficients(rings), 0.0};
    return w;
}

Eigen::VectorXd coefficients_from_weights(const RingGeometry& geom, const Weights& w)
{
    if (w.rings.size() != geom.ring_count())
        throw DomainError("weight count does not match ring count");
    Eigen::VectorXd out(static_cast<Eigen::Index>(geom.basis_size()));
    for (std::size_t n = 0; n < w.rings.size(); ++n)
        out(static_cast<Eigen::Index>(n)) = w.rings[n].real();
    if (geom.has_center_element())
        out(static_cast<Eigen::Index>(w.rings.size())) = w.center.real();
    return out;
}

double residual_norm(const DesignMatrix& matrix, const Eigen::VectorXd& coefficients,
                     const Eigen::VectorXd& rhs)
{
    return (matrix.entries * coefficients - rhs).norm();
}

SynthesisResult synthesize(const RingGeometry& geom, const TargetPattern& target,
                           const SynthesisOptions& options)
{
    return synthesize(geom, std::function<double(double)>([&target](double u) { return target.evaluate(u); }),
                      options);
}

SynthesisResult synthesize(const RingGeometry& geom, const std::function<double(double)>& target,
                           const SynthesisOptions& options)
{
    if (options.max_passes < 0)
        throw DomainError("max_passes must be >= 0");
    if (!(options.tolerance >= 0.0))
        throw DomainError("tolerance must be >= 0");

    SampleSet samples = sample_function(target, planned_batch_samples(geom, options.sample_multiplier));
    const DesignMatrix full = build_design_matrix(geom, samples.abscissas());
    const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(
        samples.values().data(), static_cast<Eigen::Index>(samples.values().size()));

    const auto batch_rows = samples.batch_indices();
    const auto incremental_rows = samples.incremental_indices();
    DesignMatrix batch;
    batch.entries = select_rows(full.entries, batch_rows);
    batch.column_labels = full.column_labels;
    const Eigen::MatrixXd incremental = select_rows(full.entries, incremental_rows);

    const BatchFactorization factor(batch);

    // Batch seed followed by recursive absorption of the incremental rows.
    auto sweep = [&](const Eigen::VectorXd& values) {
        SolverState s;
        s.estimate = factor.solve(select_rows(values, batch_rows));
        s.inv_gramian = factor.inv_gramian();
        s.samples_absorbed = batch_rows.size();
        for (std::size_t i = 0; i < incremental_rows.size(); ++i)
            s = rls_absorb(std::move(s), incremental.row(static_cast<Eigen::Index>(i)).transpose(),
                           values(static_cast<Eigen::Index>(incremental_rows[i])));
        return s;
    };

    SolverState state;
    state.estimate = factor.solve(select_rows(rhs, batch_rows));
    state.inv_gramian = factor.inv_gramian();
    state.samples_absorbed = batch_rows.size();
    state.condition_estimate = factor.condition();
    state.residual_trace.push_back(residual_norm(full, state.estimate, rhs));

    for (int pass = 1; pass <= options.max_passes; ++pass) {
        Eigen::VectorXd next;
        SolverState swept;
        if (pass == 1) {
            swept = sweep(rhs);
            next = swept.estimate;
        } else {
            const Eigen::VectorXd residual = rhs - full.entries * state.estimate;
            swept = sweep(residual);
            next = state.estimate + swept.estimate;
        }
        const double change = relative_change(state.estimate, next);
        state.estimate = std::move(next);
        state.inv_gramian = std::move(swept.inv_gramian);
        state.samples_absorbed = swept.samples_absorbed;
        state.passes_completed = pass;
        state.residual_trace.push_back(residual_norm(full, state.estimate, rhs));
        state.estimate_change.push_back(change);
        if (change <= options.tolerance) {
            state.converged = true;
            break;
        }
    }

    Weights weights = weights_from_coefficients(geom, state.estimate);
    return {std::move(weights), std::move(state), std::move(samples)};
}

} // namespace ringsynth
