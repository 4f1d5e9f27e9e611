// Copyright 2026 The genconchoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include <conchoid/errors.h>
#include <conchoid/sampler.h>

#include "worked_example.h"

using namespace conchoid;
using std::numbers::pi;

namespace {

constexpr double tableTolerance = 1.5e-3;

GpcConfig workedExampleConfig() {
    return {{0, 0}, LineSegmentCurve({-3, 0}, {0, 1.5}), expr::parse("l + sin(l)"), 18};
}

GpcConfig nicomedesConfig(int m = 180) {
    return {{0, 0}, LineSegmentCurve({-3, 1}, {3, 1}), expr::parse("2"), m};
}

} // namespace

TEST_CASE("worked example reproduces the published tables") {
    const GpcResult r = sampleGpc(workedExampleConfig());
    REQUIRE(r.samples.size() == testing::workedExample.size());
    CHECK(r.dropped == 0);
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const GpcSample& s = r.samples[i];
        const testing::WorkedExampleRow& row = testing::workedExample[i];
        INFO("row " << i);
        REQUIRE(s.valid());
        CHECK(std::abs(s.k - row.k) <= tableTolerance);
        CHECK(std::abs(s.p.x - row.px) <= tableTolerance);
        CHECK(std::abs(s.p.y - row.py) <= tableTolerance);
        CHECK(std::abs(s.l - row.l) <= tableTolerance);
        CHECK(std::abs(s.d - row.d) <= tableTolerance);
        CHECK(std::abs(s.u->dx - row.ux) <= tableTolerance);
        CHECK(std::abs(s.u->dy - row.uy) <= tableTolerance);
        CHECK(std::abs(s.qInner->x - row.qx) <= tableTolerance);
        CHECK(std::abs(s.qInner->y - row.qy) <= tableTolerance);
        CHECK(std::abs(s.qOuter->x - row.qox) <= tableTolerance);
        CHECK(std::abs(s.qOuter->y - row.qoy) <= tableTolerance);
    }
}

TEST_CASE("sample grid includes both endpoints with uniform spacing") {
    for (int m : {2, 3, 18, 180, 1001}) {
        GpcConfig c = nicomedesConfig(m);
        const GpcResult r = sampleGpc(c);
        REQUIRE(r.samples.size() == static_cast<std::size_t>(m));
        CHECK(r.samples.front().k == 0.0);
        CHECK(r.samples.back().k == 1.0);
        for (int i = 0; i < m; ++i) {
            CHECK(r.samples[i].k == static_cast<double>(i) / (m - 1));
        }
    }
}

TEST_CASE("constant offset on a horizontal line") {
    GpcConfig c = nicomedesConfig(5);
    const GpcResult r = sampleGpc(c);
    for (const GpcSample& s : r.samples) {
        CHECK(s.d == 2);
        CHECK(std::abs(distance(*s.qOuter, s.p) - 2) <= 1e-12);
    }
}

TEST_CASE("Nicomedes polar form") {
    const GpcResult r = sampleGpc(nicomedesConfig());
    for (const GpcSample& s : r.samples) {
        REQUIRE(s.valid());
        const double theta = std::atan2(s.p.y, s.p.x);
        CHECK(std::abs(s.qOuter->norm() - (1 / std::sin(theta) + 2)) <= 1e-9);
    }
}

TEST_CASE("arc example") {
    GpcConfig c{{0, 0}, CircularArcCurve({5, 10}, 6, 0, 9 * pi / 8), expr::parse("l + 1/l"), 180};
    const GpcResult r = sampleGpc(c);
    REQUIRE(r.samples.size() == 180);
    CHECK(std::abs(r.samples.back().p.x - -0.543) <= 1e-3);
    CHECK(std::abs(r.samples.back().p.y - 7.704) <= 1e-3);
    const GpcSample& first = r.samples.front();
    CHECK(first.d == INFINITY);
    CHECK_FALSE(first.valid());
    CHECK(first.reason == InvalidReason::NonFiniteOffset);
    CHECK_FALSE(first.qInner.has_value());
    CHECK(r.dropped == 1);
}

TEST_CASE("negative and zero offsets are valid") {
    GpcConfig c{{0, 0}, LineSegmentCurve({-4, 1}, {4, 1}), expr::parse("sin(l)"), 180};
    const GpcResult r = sampleGpc(c);
    CHECK(r.dropped == 0);
    bool sawNegative = false;
    for (const GpcSample& s : r.samples) {
        sawNegative = sawNegative || s.d < 0;
    }
    CHECK(sawNegative);
    CHECK(r.samples.front().d == 0);
    CHECK(r.samples.front().valid());
}

TEST_CASE("a base curve through the focus yields a degenerate sample") {
    GpcConfig c{{0, 0}, LineSegmentCurve({-1, 0}, {1, 0}), expr::parse("1"), 3};
    const GpcResult r = sampleGpc(c);
    CHECK(r.dropped == 1);
    CHECK(r.samples[1].reason == InvalidReason::DegenerateRay);
    CHECK(r.samples[0].valid());
    CHECK(r.samples[2].valid());

    c.dropNonFinite = false;
    CHECK_THROWS_AS(sampleGpc(c), DegenerateRay);
}

TEST_CASE("strict mode rejects non-finite offsets") {
    GpcConfig c{{0, 0}, LineSegmentCurve({-2, 1}, {2, 1}), expr::parse("ln(l)"), 10};
    CHECK(sampleGpc(c).dropped == 1);
    c.dropNonFinite = false;
    CHECK_THROWS_AS(sampleGpc(c), NonFiniteOffset);
}

TEST_CASE("configuration errors") {
    GpcConfig c = nicomedesConfig(1);
    CHECK_THROWS_AS(sampleGpc(c), InvalidConfig);
    c = nicomedesConfig();
    c.offset = expr::parse("1/0");
    CHECK_THROWS_AS(sampleGpc(c), AllSamplesInvalid);
    c = nicomedesConfig();
    c.focus = {NAN, 0};
    CHECK_THROWS_AS(sampleGpc(c), NonFiniteValue);
}

TEST_CASE("branch polylines") {
    SUBCASE("no gaps") {
        const BranchPolylines lines = branchPolylines(sampleGpc(workedExampleConfig()));
        REQUIRE(lines.inner.size() == 1);
        CHECK(lines.inner[0].size() == 18);
        CHECK(lines.outer[0].size() == 18);
        CHECK(lines.base[0].size() == 18);
    }
    SUBCASE("an invalid interior sample splits every branch") {
        GpcConfig c{{0, 0}, LineSegmentCurve({0, 0}, {4, 0}), expr::parse("1/(l-2)"), 5};
        c.focus = {0, 1};
        const GpcResult r = sampleGpc(c);
        REQUIRE(r.dropped == 1);
        const BranchPolylines lines = branchPolylines(r);
        REQUIRE(lines.inner.size() == 2);
        CHECK(lines.inner[0].size() == 2);
        CHECK(lines.inner[1].size() == 2);
        CHECK(lines.outer.size() == 2);
        CHECK(lines.base.size() == 2);
        CHECK(lines.base[1][0] == Point2{3, 0});
    }
    SUBCASE("single valid sample") {
        GpcConfig c{{0, 1}, LineSegmentCurve({0, 0}, {4, 0}), expr::parse("1/(l-4)"), 2};
        const GpcResult r = sampleGpc(c);
        REQUIRE(r.dropped == 1);
        const BranchPolylines lines = branchPolylines(r);
        REQUIRE(lines.inner.size() == 1);
        CHECK(lines.inner[0].size() == 1);
    }
    SUBCASE("nothing valid") {
        GpcResult r = sampleGpc(nicomedesConfig(3));
        for (GpcSample& s : r.samples) {
            s.reason = InvalidReason::NonFiniteOffset;
        }
        CHECK_THROWS_AS(branchPolylines(r), AllSamplesInvalid);
    }
}

TEST_CASE("construction is deterministic") {
    GpcConfig c{{0.3, -0.2}, CircularArcCurve({0, 3.5}, 2, 0, 2 * pi), expr::parse("2*sin(l)"), 180};
    const GpcResult a = sampleGpc(c);
    const GpcResult b = sampleGpc(c);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(std::bit_cast<std::uint64_t>(a.samples[i].qOuter->x)
              == std::bit_cast<std::uint64_t>(b.samples[i].qOuter->x));
        CHECK(std::bit_cast<std::uint64_t>(a.samples[i].qInner->y)
              == std::bit_cast<std::uint64_t>(b.samples[i].qInner->y));
    }
}

TEST_CASE("radial split for nonnegative offsets") {
    GpcConfig c{{1, -2}, CircularArcCurve({0, 3.5}, 2, 0, 2 * pi), expr::parse("l"), 90};
    const GpcResult r = sampleGpc(c);
    for (const GpcSample& s : r.samples) {
        const double rho = distance(s.p, c.focus);
        const double tol = 1e-9 * (1 + rho + s.d);
        CHECK(std::abs(distance(*s.qOuter, c.focus) - (rho + s.d)) <= tol);
        CHECK(std::abs(distance(*s.qInner, c.focus) - std::abs(rho - s.d)) <= tol);
    }
}
