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

#include "ringsynth/targets.hpp"

#include "ringsynth/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace ringsynth {

namespace {

constexpr double kPi = std::numbers::pi;

double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }

void require_visible(double u)
{
    if (!(std::fabs(u) <= 1.0 + 1e-12))
        throw DomainError("target evaluated outside visible space |u| <= 1");
}

double golden_max(const std::function<double(double)>& fn, double a, double b)
{
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = fn(d);
        }
    }
    return fc > fd ? c : d;
}

// Largest value of fn over [lo, hi].
double peak_value(const std::function<double(double)>& fn, double lo, double hi)
{
    double best = 0.0;
    for (const auto& m : detail::local_maxima(fn, lo, hi, 10001))
        best = std::max(best, m.value);
    return best;
}

// Sidelobe level (dB) of a single-sided pattern on [0, 1]: second largest
// local maximum relative to the largest.
double relative_sll_db(const std::function<double(double)>& fn)
{
    auto maxima = detail::local_maxima(fn, 0.0, 1.0, 4001);
    if (maxima.size() < 2)
        return -std::numeric_limits<double>::infinity();
    std::sort(maxima.begin(), maxima.end(),
              [](const auto& a, const auto& b) { return a.value > b.value; });
    return 20.0 * std::log10(maxima[1].value / maxima[0].value);
}

void check_sll(double sll_db, int aperture_rings)
{
    if (!(sll_db >= -80.0 && sll_db <= -3.0))
        throw DomainError("sidelobe level must lie in [-80, -3] dB");
    if (aperture_rings < 1)
        throw DomainError("aperture_rings must be >= 1");
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out)
{
    s = trim(s);
    if (s.empty())
        return false;
    if (s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

} // namespace

namespace detail {

double chebyshev(int order, double x)
{
    if (std::fabs(x) <= 1.0)
        return std::cos(order * std::acos(x));
    const double magnitude = std::cosh(order * std::acosh(std::fabs(x)));
    return (x < 0.0 && order % 2 != 0) ? -magnitude : magnitude;
}

std::vector<Extremum> local_maxima(const std::function<double(double)>& fn, double lo, double hi,
                                   int n)
{
    std::vector<double> u(n);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        u[i] = lo + (hi - lo) * i / (n - 1);
        v[i] = fn(u[i]);
    }
    std::vector<Extremum> out;
    for (int i = 0; i < n; ++i) {
        const bool rises_in = i == 0 ? false : v[i] > v[i - 1];
        if (i == 0) {
            if (v[0] > v[1])
                out.push_back({u[0], v[0]});
            continue;
        }
        if (i == n - 1) {
            if (rises_in)
                out.push_back({u[i], v[i]});
            continue;
        }
        if (rises_in && v[i] >= v[i + 1]) {
            const double at = golden_max(fn, u[i - 1], u[i + 1]);
            const double val = fn(at);
            out.push_back(val >= v[i] ? Extremum{at, val} : Extremum{u[i], v[i]});
        }
    }
    return out;
}

} // namespace detail

std::string_view to_string(TargetKind kind)
{
    switch (kind) {
    case TargetKind::flat_top: return "flat_top";
    case TargetKind::equi_ripple: return "equi_ripple";
    case TargetKind::difference: return "difference";
    case TargetKind::equi_ripple_with_nulls: return "equi_ripple_with_nulls";
    case TargetKind::tabulated: return "tabulated";
    }
    return "unknown";
}

std::optional<double> TargetPattern::design_sll_db() const
{
    if (const auto* p = std::get_if<EquiRippleParams>(&params_))
        return p->sll_db;
    if (const auto* p = std::get_if<DifferenceParams>(&params_))
        return p->sll_db;
    return std::nullopt;
}

double TargetPattern::evaluate(double u) const
{
    require_visible(u);
    return fn_(std::clamp(u, -1.0, 1.0));
}

TargetPattern flat_top(double passband_edge, double transition_width)
{
    if (!(passband_edge > 0.0 && passband_edge < 1.0))
        throw DomainError("flat_top: passband edge must lie in (0, 1)");
    if (!(transition_width >= 0.0) || passband_edge + transition_width > 1.0)
        throw DomainError("flat_top: transition must be >= 0 and end inside visible space");

    const double edge = passband_edge;
    const double width = transition_width;
    auto fn = [edge, width](double u) {
        const double a = std::fabs(u);
        if (a <= edge)
            return 1.0;
        if (a >= edge + width)
            return 0.0;
        return 0.5 * (1.0 + std::cos(kPi * (a - edge) / width));
    };
    return TargetPattern(TargetKind::flat_top, FlatTopParams{edge, width}, fn);
}

TargetPattern equi_ripple(double sll_db, int aperture_rings)
{
    check_sll(sll_db, aperture_rings);
    const int order = 2 * aperture_rings;
    const double ratio = db_to_amplitude(-sll_db);
    const double x0 = std::cosh(std::acosh(ratio) / order);
    const double norm = detail::chebyshev(order, x0);
    auto fn = [order, x0, norm](double u) {
        return std::fabs(detail::chebyshev(order, x0 * std::cos(kPi * std::fabs(u) / 2.0))) / norm;
    };
    return TargetPattern(TargetKind::equi_ripple, EquiRippleParams{sll_db, aperture_rings}, fn);
}

TargetPattern difference(double sll_db, int aperture_rings)
{
    check_sll(sll_db, aperture_rings);
    const int order = 2 * aperture_rings;
    auto raw = [order](double ratio) {
        const double x0 = std::cosh(std::acosh(ratio) / order);
        return std::function<double(double)>([order, x0](double u) {
            const double s = std::sin(kPi * std::fabs(u) / 2.0);
            return s * s * std::fabs(detail::chebyshev(order, x0 * std::cos(kPi * std::fabs(u) / 2.0)));
        });
    };

    // Sidelobes fall as the ratio grows; bisect in log space for the smallest
    // ratio meeting the requested level.
    double lo = std::log(1.0 + 1e-6);
    double hi = std::log(1e12);
    if (relative_sll_db(raw(std::exp(hi))) > sll_db)
        throw DomainError("difference: requested sidelobe level is not reachable");
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (relative_sll_db(raw(std::exp(mid))) > sll_db)
            lo = mid;
        else
            hi = mid;
    }
    const double ratio = std::exp(hi);
    auto shape = raw(ratio);
    const double peak = peak_value(shape, 0.0, 1.0);
    auto fn = [shape, peak](double u) { return shape(u) / peak; };
    return TargetPattern(TargetKind::difference, DifferenceParams{sll_db, aperture_rings, ratio}, fn);
}

TargetPattern with_nulls(const TargetPattern& base, const std::vector<double>& null_centers,
                         double null_depth_db, double null_width)
{
    if (null_centers.empty())
        return base;
    if (base.nulls_)
        throw DomainError("with_nulls: base pattern already carries nulls");
    if (!(null_width > 0.0))
        throw DomainError("with_nulls: null width must be positive");
    const double ceiling = base.design_sll_db().value_or(0.0);
    if (!(null_depth_db < ceiling))
        throw DomainError("with_nulls: null depth must lie below the base sidelobe level");
    std::vector<double> centers = null_centers;
    std::sort(centers.begin(), centers.end());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (!(centers[i] > -1.0 && centers[i] < 1.0))
            throw DomainError("with_nulls: null centers must lie in (-1, 1)");
        if (i > 0 && centers[i] - centers[i - 1] < 2.0 * null_width)
            throw DomainError("with_nulls: notches overlap");
    }

    // Per-notch floor factor so the amplitude at the center is exactly the
    // requested depth (or the base value if that is already lower).
    const double floor_amplitude = db_to_amplitude(null_depth_db);
    std::vector<double> floors;
    for (double c : centers) {
        const double b = base.evaluate(c);
        floors.push_back(b > floor_amplitude ? floor_amplitude / b : 1.0);
    }

    auto base_fn = base.fn_;
    auto notched = [base_fn, centers, floors, null_width](double u) {
        double v = base_fn(u);
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const double t = (u - centers[i]) / null_width;
            if (std::fabs(t) < 1.0) {
                const double g = std::cos(kPi * t / 2.0);
                v *= 1.0 - (1.0 - floors[i]) * g * g;
            }
        }
        return v;
    };

    std::function<double(double)> fn = notched;
    const double peak = peak_value(fn, -1.0, 1.0);
    if (std::fabs(peak - 1.0) > 1e-12 && peak > 0.0)
        fn = [notched, peak](double u) { return notched(u) / peak; };

    const TargetKind kind =
        base.kind_ == TargetKind::equi_ripple ? TargetKind::equi_ripple_with_nulls : base.kind_;
    TargetPattern out(kind, base.params_, fn);
    out.nulls_ = NullSpec{centers, null_depth_db, null_width};
    return out;
}

TargetPattern from_table(const std::vector<TablePoint>& samples)
{
    if (samples.size() < 2)
        throw FormatError("target table needs at least two points");
    double peak = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& p = samples[i];
        if (!std::isfinite(p.u) || !std::isfinite(p.amplitude))
            throw FormatError("target table row " + std::to_string(i + 1) + ": non-finite value");
        if (p.u < -1.0 || p.u > 1.0)
            throw FormatError("target table row " + std::to_string(i + 1) + ": u outside [-1, 1]");
        if (p.amplitude < 0.0)
            throw FormatError("target table row " + std::to_string(i + 1) + ": negative amplitude");
        if (i > 0 && !(p.u > samples[i - 1].u))
            throw FormatError("target table row " + std::to_string(i + 1) +
                              ": u values must be strictly increasing");
        peak = std::max(peak, p.amplitude);
    }
    if (!(peak > 0.0))
        throw FormatError("target table has no positive amplitude");

    std::vector<double> us;
    std::vector<double> vs;
    for (const auto& p : samples) {
        us.push_back(p.u);
        vs.push_back(p.amplitude / peak);
    }
    auto fn = [us, vs](double u) {
        if (u <= us.front())
            return vs.front();
        if (u >= us.back())
            return vs.back();
        const auto it = std::upper_bound(us.begin(), us.end(), u);
        const auto hi = static_cast<std::size_t>(it - us.begin());
        const auto lo = hi - 1;
        const double t = (u - us[lo]) / (us[hi] - us[lo]);
        return vs[lo] + t * (vs[hi] - vs[lo]);
    };
    return TargetPattern(TargetKind::tabulated, TableParams{samples}, fn);
}

std::vector<TablePoint> parse_table_csv(std::string_view text)
{
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF")
        text.remove_prefix(3);

    std::vector<TablePoint> points;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const auto line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty())
            continue;

        const auto comma = line.find(',');
        double u = 0.0;
        double a = 0.0;
        const bool ok = comma != std::string_view::npos &&
                        line.find(',', comma + 1) == std::string_view::npos &&
                        parse_double(line.substr(0, comma), u) &&
                        parse_double(line.substr(comma + 1), a);
        if (!ok) {
            if (!seen_content) {
                seen_content = true; // header line
                continue;
            }
            throw FormatError("target table line " + std::to_string(line_no) +
                              ": expected two numeric columns 'u,amplitude'");
        }
        seen_content = true;
        points.push_back({u, a});
    }
    return points;
}

std::vector<TablePoint> read_table_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot read target table '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table_csv(buffer.str());
}

} // namespace ringsynth
