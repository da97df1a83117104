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

#include "ringsynth/specialfn.hpp"

#include "ringsynth/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ringsynth {

KernelOrder::KernelOrder(int m_points) : m_points_(m_points)
{
    if (m_points < 1)
        throw DomainError("kernel order must be >= 1, got " + std::to_string(m_points));
}

namespace detail {

double j0_power_series(double x)
{
    // sum_k (-1)^k (x^2/4)^k / (k!)^2, accumulated in extended precision so
    // that the cancellation near the switchover stays below 1e-13.
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-24L)
            break;
    }
    return static_cast<double>(sum);
}

double j0_asymptotic(double x)
{
    // Hankel expansion: J0 = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4)),
    // t_k = t_{k-1} (2k-1)^2 / (8 k x); P takes even k, Q odd k, alternating.
    const double ax = std::fabs(x);
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd / (8.0 * k * ax);
        if (term > previous || term < 1e-18)
            break;
        previous = term;
        // Q = -t1 + t3 - ..., P = 1 - t2 + t4 - ...
        const bool negative = (k % 4 == 1) || (k % 4 == 2);
        const double signed_term = negative ? -term : term;
        if (k % 2 == 0)
            p += signed_term;
        else
            q += signed_term;
    }
    const double c = std::cos(ax);
    const double s = std::sin(ax);
    return std::sqrt(1.0 / (std::numbers::pi * ax)) * (p * (c + s) - q * (s - c));
}

} // namespace detail

double bessel_j0(double x)
{
    if (!std::isfinite(x))
        throw DomainError("bessel_j0: argument must be finite");
    const double ax = std::fabs(x);
    if (ax < detail::kJ0SeriesLimit)
        return detail::j0_power_series(ax);
    return detail::j0_asymptotic(ax);
}

double sampling_kernel(double psi, KernelOrder order)
{
    if (!std::isfinite(psi))
        throw DomainError("sampling_kernel: angle must be finite");
    const double wrapped = std::remainder(psi, 2.0 * std::numbers::pi);
    const double denom = std::sin(wrapped / 2.0);
    if (std::fabs(denom) < 1e-9)
        return 1.0;
    const double m = order.points();
    return std::sin(m * wrapped / 2.0) / (m * denom);
}

} // namespace ringsynth
