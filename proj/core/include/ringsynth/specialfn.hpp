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

namespace ringsynth {

/// Number of points M of the periodic sampling kernel.
class KernelOrder {
public:
    explicit KernelOrder(int m_points);
    int points() const noexcept { return m_points_; }

private:
    int m_points_;
};

/// Bessel function of the first kind, order zero.
///
/// Absolute error stays below 1e-10 for |x| <= 500. Evaluated on |x|, so the
/// result is exactly even. Throws DomainError for non-finite input.
double bessel_j0(double x);

/// Periodic sampling kernel sin(M psi / 2) / (M sin(psi / 2)).
///
/// The angle is first reduced to (-pi, pi], which makes the kernel 2*pi
/// periodic for every M (for even M the raw ratio is only anti-periodic) and
/// gives exactly 1 at every multiple of 2*pi.
double sampling_kernel(double psi, KernelOrder order);

namespace detail {

// Switchover between the power series and the Hankel asymptotic expansion.
inline constexpr double kJ0SeriesLimit = 16.0;

double j0_power_series(double x);
double j0_asymptotic(double x);

} // namespace detail

} // namespace ringsynth
