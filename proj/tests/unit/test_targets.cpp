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

#include "ringsynth/errors.hpp"
#include "ringsynth/targets.hpp"

#include "oracles/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace ringsynth;

namespace {

double amp(double db) { return std::pow(10.0, db / 20.0); }

// Sidelobe maxima of a pencil beam: scan maxima on (0, 1] excluding the one
// at the boresight peak.
std::vector<double> sidelobe_maxima(const TargetPattern& t)
{
    auto m = oracle::scan_local_maxima([&](double u) { return t(u); }, 0.0, 1.0, 10000);
    // include the endpoint u = 1 when the pattern rises into it
    if (t(1.0) > t(1.0 - 1e-4))
        m.push_back(t(1.0));
    return m;
}

} // namespace

TEST(FlatTop, PassbandAndStopband)
{
    const auto t = flat_top(0.4, 0.0);
    EXPECT_EQ(t(0.2), 1.0);
    EXPECT_EQ(t(-0.4), 1.0);
    EXPECT_EQ(t(0.7), 0.0);
    EXPECT_EQ(t.kind(), TargetKind::flat_top);
}

TEST(FlatTop, RaisedCosineMidpoint)
{
    const auto t = flat_top(0.4, 0.1);
    EXPECT_NEAR(t(0.45), 0.5, 1e-12);
    EXPECT_EQ(t(0.5), 0.0);
}

TEST(FlatTop, RejectsBadEdges)
{
    EXPECT_THROW(flat_top(0.0, 0.0), DomainError);
    EXPECT_THROW(flat_top(1.0, 0.0), DomainError);
    EXPECT_THROW(flat_top(0.8, 0.3), DomainError);
    EXPECT_THROW(flat_top(0.4, -0.1), DomainError);
}

TEST(EquiRipple, PeakAndSidelobeLevels)
{
    for (double sll : {-30.0, -16.0}) {
        const auto t = equi_ripple(sll, 10);
        EXPECT_NEAR(t(0.0), 1.0, 1e-12);
        const auto lobes = sidelobe_maxima(t);
        ASSERT_GE(lobes.size(), 3u);
        for (double v : lobes)
            EXPECT_NEAR(20.0 * std::log10(v), sll, 0.5) << sll;
    }
}

TEST(EquiRipple, RangeChecked)
{
    EXPECT_THROW(equi_ripple(-2.0, 10), DomainError);
    EXPECT_THROW(equi_ripple(-90.0, 10), DomainError);
    EXPECT_THROW(equi_ripple(-30.0, 0), DomainError);
}

TEST(Difference, BoresightNullTwinLobesAndSidelobes)
{
    const auto t = difference(-25.0, 10);
    EXPECT_EQ(t(0.0), 0.0);
    auto fn = [&](double u) { return t(u); };
    EXPECT_NEAR(oracle::scan_max(fn, -1.0, 1.0, 20001), 1.0, 1e-6);
    auto maxima = sidelobe_maxima(t);
    std::sort(maxima.begin(), maxima.end(), std::greater<>());
    ASSERT_GE(maxima.size(), 2u);
    EXPECT_NEAR(maxima[0], 1.0, 1e-6);
    for (std::size_t i = 1; i < maxima.size(); ++i)
        EXPECT_LE(maxima[i], amp(-25.0) * (1.0 + 1e-6));
    EXPECT_NEAR(maxima[1], amp(-25.0), amp(-25.0) * 0.01);
    EXPECT_EQ(t(0.3), t(-0.3));
}

TEST(WithNulls, NotchOnFlatBase)
{
    const auto base = from_table({{-1.0, 1.0}, {1.0, 1.0}});
    const auto t = with_nulls(base, {0.5}, -40.0, 0.05);
    EXPECT_NEAR(t(0.5), 0.01, 1e-12);
    ASSERT_TRUE(t.nulls().has_value());
    EXPECT_EQ(t.nulls()->centers, std::vector<double>{0.5});
}

TEST(WithNulls, EmptyListIsIdentity)
{
    const auto base = equi_ripple(-20.0, 6);
    const auto t = with_nulls(base, {}, -40.0, 0.05);
    for (double u : {-0.9, -0.3, 0.0, 0.41, 0.77})
        EXPECT_EQ(t(u), base(u));
    EXPECT_EQ(t.kind(), TargetKind::equi_ripple);
}

TEST(WithNulls, FloorsAtRequestedDepthOnSidelobeBase)
{
    const auto base = equi_ripple(-16.0, 11);
    const auto t = with_nulls(base, {-0.5, 0.5}, -40.0, 0.1);
    EXPECT_EQ(t.kind(), TargetKind::equi_ripple_with_nulls);
    for (double c : {-0.5, 0.5})
        EXPECT_NEAR(20.0 * std::log10(t(c)), -40.0, 1e-9);
}

TEST(WithNulls, UnchangedOutsideNotches)
{
    const auto base = equi_ripple(-16.0, 11);
    const auto t = with_nulls(base, {-0.5, 0.5}, -40.0, 0.1);
    for (int i = 0; i <= 4000; ++i) {
        const double u = -1.0 + 2.0 * i / 4000;
        if (std::fabs(std::fabs(u) - 0.5) < 0.1)
            continue;
        ASSERT_LE(std::fabs(t(u) - base(u)), 1e-12) << u;
    }
}

TEST(WithNulls, Preconditions)
{
    const auto base = equi_ripple(-16.0, 11);
    EXPECT_THROW(with_nulls(base, {0.5, 0.55}, -40.0, 0.05), DomainError);
    EXPECT_THROW(with_nulls(base, {1.0}, -40.0, 0.05), DomainError);
    EXPECT_THROW(with_nulls(base, {0.5}, -10.0, 0.05), DomainError);
    EXPECT_THROW(with_nulls(base, {0.5}, -40.0, 0.0), DomainError);
}

TEST(FromTable, InterpolatesAndNormalizes)
{
    const auto t = from_table({{-1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}});
    EXPECT_DOUBLE_EQ(t(0.5), 0.5);
    const auto flat = from_table({{-1.0, 2.0}, {1.0, 2.0}});
    EXPECT_EQ(flat(0.3), 1.0);
    const auto partial = from_table({{-0.5, 1.0}, {0.5, 3.0}});
    EXPECT_DOUBLE_EQ(partial(-0.9), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(partial(0.9), 1.0);
}

TEST(FromTable, FormatErrors)
{
    EXPECT_THROW(from_table({{0.0, 1.0}}), FormatError);
    EXPECT_THROW(from_table({{0.5, 1.0}, {0.1, 1.0}}), FormatError);
    EXPECT_THROW(from_table({{0.1, 1.0}, {0.1, 1.0}}), FormatError);
    EXPECT_THROW(from_table({{-2.0, 1.0}, {0.1, 1.0}}), FormatError);
}

TEST(TableCsv, HeaderOptional)
{
    const auto with_header = parse_table_csv("u,amplitude\n-1,0\n0,1\n1,0\n");
    ASSERT_EQ(with_header.size(), 3u);
    EXPECT_EQ(with_header[1].amplitude, 1.0);
    const auto bare = parse_table_csv("\xEF\xBB\xBF-1, 0.5\r\n1,0.25\n\n");
    ASSERT_EQ(bare.size(), 2u);
    EXPECT_EQ(bare[0].amplitude, 0.5);
}

TEST(TableCsv, BadRowNamesLine)
{
    try {
        parse_table_csv("u,a\n0,1\n0.5;2\n");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(TargetProperty, PeakNormalizedAndEven)
{
    const std::vector<TargetPattern> targets{
        flat_top(0.4, 0.0),        flat_top(0.3, 0.2),       equi_ripple(-30.0, 8),
        equi_ripple(-16.0, 11),    equi_ripple(-60.0, 20),   difference(-25.0, 10),
        difference(-35.0, 6),      with_nulls(equi_ripple(-16.0, 11), {-0.5, 0.5}, -40.0, 0.1),
        from_table({{-1.0, 0.2}, {0.0, 3.0}, {1.0, 0.5}}),
    };
    for (const auto& t : targets) {
        auto fn = [&](double u) { return t(u); };
        const double scanned = oracle::scan_max(fn, -1.0, 1.0, 10001);
        EXPECT_LE(scanned, 1.0 + 1e-9) << to_string(t.kind());
        // The odd-count scan hits u = 0, where the pencil and flat patterns
        // peak; the twin lobes of the difference pattern fall between points.
        if (t.kind() == TargetKind::difference)
            EXPECT_NEAR(scanned, 1.0, 1e-5);
        else
            EXPECT_NEAR(scanned, 1.0, 1e-9) << to_string(t.kind());
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (int k = 0; k <= 1000; ++k) {
            const double u = k / 1000.0;
            ASSERT_LE(std::fabs(targets[i](u) - targets[i](-u)), 1e-12);
        }
}

TEST(TargetPattern, OutsideVisibleSpace)
{
    EXPECT_THROW(flat_top(0.4, 0.0)(1.5), DomainError);
}
