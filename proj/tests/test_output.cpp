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
#include <numbers>
#include <sstream>

#include <json.hpp>

#include <conchoid/errors.h>
#include <conchoid/format.h>
#include <conchoid/output.h>

#include "svg_probe.h"
#include "worked_example.h"

using namespace conchoid;
using std::numbers::pi;

namespace {

GpcResult workedExample() {
    return sampleGpc({{0, 0}, LineSegmentCurve({-3, 0}, {0, 1.5}), expr::parse("l + sin(l)"), 18});
}

GpcResult nicomedes(int m = 180) {
    return sampleGpc({{0, 0}, LineSegmentCurve({-3, 1}, {3, 1}), expr::parse("2"), m});
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> cells(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

bool sameBits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

} // namespace

TEST_CASE("fixedDecimal") {
    CHECK(fixedDecimal(2.0, 0) == "2");
    CHECK(fixedDecimal(2.0, 3) == "2.000");
    CHECK(fixedDecimal(0.0005, 3) == "0.001");
    CHECK(fixedDecimal(-0.0005, 3) == "-0.001");
    CHECK(fixedDecimal(0.00049, 3) == "0.000");
    CHECK(fixedDecimal(-0.0001, 3) == "0.000");
    CHECK(fixedDecimal(-0.0, 3) == "0.000");
    CHECK(fixedDecimal(9.9996, 3) == "10.000");
    CHECK(fixedDecimal(2.5, 0) == "3");
    CHECK(fixedDecimal(-2.5, 0) == "-3");
    CHECK(fixedDecimal(1234567.891, 2) == "1234567.89");
    CHECK(fixedDecimal(1e20, 1) == "100000000000000000000.0");
    CHECK(fixedDecimal(1.5e-10, 12) == "0.000000000150");
    CHECK(fixedDecimal(0.1 + 0.2, 12) == "0.300000000000");
}

TEST_CASE("shortestDecimal round-trips") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, pi}) {
        CHECK(std::stod(shortestDecimal(x)) == x);
    }
}

TEST_CASE("CSV calculation table") {
    const GpcResult r = workedExample();
    const TableSpec spec({TableColumn::K, TableColumn::P, TableColumn::LVec, TableColumn::LNorm, TableColumn::D});
    const std::vector<std::string> rows = lines(writeCsv(r, spec));
    REQUIRE(rows.size() == 19);
    CHECK(rows[0] == "k,p_x,p_y,l_x,l_y,l,d");
    CHECK(rows[5] == "0.235,-2.294,0.353,0.706,0.353,0.789,1.499");
    CHECK(rows[1] == "0.000,-3.000,0.000,0.000,0.000,0.000,0.000");
    CHECK(rows[18] == "1.000,0.000,1.500,3.000,1.500,3.354,3.143");
}

TEST_CASE("CSV cells match every published value within one unit") {
    const std::vector<std::string> rows = lines(writeCsv(workedExample()));
    REQUIRE(rows.size() == 19);
    CHECK(rows[0]
          == "k,p_x,p_y,l_x,l_y,l,d,p_minus_o_x,p_minus_o_y,p_minus_o_norm,u_x,u_y,"
             "q_inner_x,q_inner_y,q_outer_x,q_outer_y");
    for (std::size_t i = 0; i < testing::workedExample.size(); ++i) {
        const auto& row = testing::workedExample[i];
        const double expected[] = {row.k,   row.px,  row.py, row.lx, row.ly, row.l,  row.d,  row.pox,
                                   row.poy, row.po,  row.ux, row.uy, row.qx, row.qy, row.qox, row.qoy};
        const std::vector<std::string> got = cells(rows[i + 1]);
        REQUIRE(got.size() == 16);
        for (std::size_t j = 0; j < got.size(); ++j) {
            INFO("row " << i << " column " << j << ": " << got[j]);
            CHECK(std::abs(std::stod(got[j]) - expected[j]) <= 1.0001e-3);
        }
    }
}

TEST_CASE("CSV formatting options") {
    const GpcResult r = nicomedes(5);
    const std::vector<std::string> rows = lines(writeCsv(r, TableSpec({TableColumn::D}, 0)));
    REQUIRE(rows.size() == 6);
    CHECK(rows[1] == "2");
    CHECK_THROWS_AS(TableSpec({}, 3), InvalidConfig);
    CHECK_THROWS_AS(TableSpec({TableColumn::K}, 13), InvalidConfig);
    CHECK_THROWS_AS(TableSpec({TableColumn::K}, -1), InvalidConfig);
}

TEST_CASE("CSV marks invalid samples") {
    const GpcResult r = sampleGpc({{0, 0}, LineSegmentCurve({-2, 1}, {2, 1}), expr::parse("ln(l)"), 5});
    REQUIRE(r.dropped == 1);
    const std::vector<std::string> rows =
        lines(writeCsv(r, TableSpec({TableColumn::K, TableColumn::D, TableColumn::QOuter})));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "k,d,q_outer_x,q_outer_y,reason");
    CHECK(rows[1] == "0.000,,,,non-finite offset");
    CHECK(cells(rows[2]).back().empty());
    CHECK(cells(rows[2]).size() == 5);
}

TEST_CASE("column names") {
    const TableSpec all;
    for (TableColumn c : all.columns()) {
        CHECK(tableColumnFromName(tableColumnName(c)) == c);
    }
    CHECK_FALSE(tableColumnFromName("bogus").has_value());
}

TEST_CASE("SVG plot structure") {
    SUBCASE("Nicomedes") {
        const testing::SvgSummary svg = testing::inspectSvg(writeSvg(nicomedes()));
        CHECK(svg.count("polyline.inner") == 1);
        CHECK(svg.count("polyline.outer") == 1);
        CHECK(svg.count("polyline.base") == 1);
        CHECK(svg.count("g.focus") == 1);
        CHECK(svg.count("line.ray") == 0);
        CHECK(svg.allCoordinatesFinite);
    }
    SUBCASE("rays") {
        PlotSpec spec;
        spec.showRays = true;
        const testing::SvgSummary svg = testing::inspectSvg(writeSvg(workedExample(), spec));
        CHECK(svg.count("line.ray") == 18);
    }
    SUBCASE("single sample") {
        const GpcResult r = sampleGpc({{0, 1}, LineSegmentCurve({0, 0}, {4, 0}), expr::parse("1/(l-4)"), 2});
        const testing::SvgSummary svg = testing::inspectSvg(writeSvg(r));
        CHECK(svg.count("polyline.inner") == 1);
        CHECK(svg.allCoordinatesFinite);
    }
    SUBCASE("gaps split polylines and invalid samples are not drawn") {
        const GpcResult r = sampleGpc({{0, 1}, LineSegmentCurve({0, 0}, {4, 0}), expr::parse("1/(l-2)"), 5});
        const testing::SvgSummary svg = testing::inspectSvg(writeSvg(r));
        CHECK(svg.count("polyline.inner") == 2);
        CHECK(svg.count("polyline.outer") == 2);
        CHECK(svg.allCoordinatesFinite);
    }
    SUBCASE("optional layers") {
        PlotSpec spec;
        spec.showBase = false;
        spec.showFocus = false;
        const testing::SvgSummary svg = testing::inspectSvg(writeSvg(nicomedes(), spec));
        CHECK(svg.count("polyline.base") == 0);
        CHECK(svg.count("g.focus") == 0);
    }
    SUBCASE("viewBox covers the drawing with y flipped") {
        const std::string text = writeSvg(nicomedes());
        const testing::SvgSummary svg = testing::inspectSvg(text);
        std::istringstream in(svg.viewBox);
        double x = 0, y = 0, w = 0, h = 0;
        in >> x >> y >> w >> h;
        // Outer branch tops out at y = 3 (straight above the focus); in the
        // flipped frame that is -3, which must lie inside the box.
        CHECK(y < -3);
        CHECK(y + h > 0);
        CHECK(w > 0);
        CHECK(text.find("scale(1,-1)") != std::string::npos);
    }
    SUBCASE("invalid spec") {
        PlotSpec spec;
        spec.marginFraction = 0.5;
        CHECK_THROWS_AS(writeSvg(nicomedes(), spec), InvalidConfig);
        spec.marginFraction = 0.05;
        spec.widthPx = 0;
        CHECK_THROWS_AS(writeSvg(nicomedes(), spec), InvalidConfig);
    }
}

TEST_CASE("JSON document") {
    const GpcResult r = sampleGpc({{0, 0}, CircularArcCurve({5, 10}, 6, 0, 9 * pi / 8), expr::parse("l + 1/l"), 180});
    const std::string text = writeJson(r);
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["dropped"] == 1);
    CHECK(doc["config"]["offset"] == "(l + (1 / l))");
    CHECK(doc["config"]["curve"]["kind"] == "arc");
    CHECK(doc["config"]["m"] == 180);
    CHECK(doc["samples"].size() == 180);
    CHECK(doc["samples"][0]["d"] == "inf");
    CHECK(doc["samples"][0]["valid"] == false);
    CHECK(doc["samples"][0]["q_inner"].is_null());

    const nlohmann::json line = nlohmann::json::parse(writeJson(workedExample()));
    CHECK(line["config"]["offset"] == "(l + sin(l))");
    CHECK(line["dropped"] == 0);
}

TEST_CASE("JSON round-trip is bit-exact on finite fields") {
    for (const GpcResult& r : {workedExample(), nicomedes(),
                               sampleGpc({{0.25, -1.0 / 3}, CircularArcCurve({0, 3.5}, 2, 0, 2 * pi),
                                          expr::parse("ln(l)"), 181})}) {
        const GpcResult back = readJson(writeJson(r));
        CHECK(back.dropped == r.dropped);
        CHECK(back.config.m == r.config.m);
        CHECK(expr::render(back.config.offset) == expr::render(r.config.offset));
        CHECK(back.config.focus == r.config.focus);
        CHECK(curveKind(back.config.curve) == curveKind(r.config.curve));
        REQUIRE(back.samples.size() == r.samples.size());
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            const GpcSample& a = r.samples[i];
            const GpcSample& b = back.samples[i];
            CHECK(sameBits(a.k, b.k));
            CHECK(sameBits(a.p.x, b.p.x));
            CHECK(sameBits(a.p.y, b.p.y));
            CHECK(sameBits(a.l, b.l));
            CHECK((sameBits(a.d, b.d) || (std::isnan(a.d) && std::isnan(b.d))));
            CHECK(a.reason == b.reason);
            CHECK(a.u.has_value() == b.u.has_value());
            if (a.u) {
                CHECK(sameBits(a.u->dx, b.u->dx));
                CHECK(sameBits(a.u->dy, b.u->dy));
                CHECK(sameBits(a.qInner->x, b.qInner->x));
                CHECK(sameBits(a.qInner->y, b.qInner->y));
                CHECK(sameBits(a.qOuter->x, b.qOuter->x));
                CHECK(sameBits(a.qOuter->y, b.qOuter->y));
            }
        }
    }
}

TEST_CASE("readJson rejects bad documents") {
    CHECK_THROWS_AS(readJson("{"), InvalidConfig);
    CHECK_THROWS_AS(readJson(R"({"schema_version": 2})"), InvalidConfig);
    const GpcResult param = sampleGpc(
        {{0, 0}, ParametricCurve([](double t) { return Point2{2 * t - 1, 1}; }), expr::parse("1"), 4});
    CHECK_THROWS_AS(readJson(writeJson(param)), InvalidConfig);
}
