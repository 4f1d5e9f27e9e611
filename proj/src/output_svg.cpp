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

#include <conchoid/output.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include <conchoid/errors.h>
#include <conchoid/format.h>

namespace conchoid {

namespace {

constexpr double focusMarkerFraction = 0.015;

struct Segment {
    Point2 a;
    Point2 b;
};

class BoundingBox {
public:
    void add(const Point2& p) {
        if (!p.isFinite()) {
            return;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    bool empty() const {
        return xmin > xmax;
    }

    double extent() const {
        const double e = std::max(xmax - xmin, ymax - ymin);
        return e > 0 ? e : 1.0;
    }

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
};

// Segment of the construction line through the focus that spans the focus
// and both branch points.
Segment raySegment(const Point2& focus, const GpcSample& s) {
    const double r = (s.p - focus).norm();
    const double t0 = std::min({0.0, r - s.d, r + s.d});
    const double t1 = std::max({0.0, r - s.d, r + s.d});
    return {focus + *s.u * t0, focus + *s.u * t1};
}

std::string pointsAttribute(const std::vector<Point2>& points) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += shortestDecimal(points[i].x);
        out += ',';
        out += shortestDecimal(points[i].y);
    }
    return out;
}

void appendLine(std::string& out, std::string_view cls, const Segment& seg) {
    out += "    <line class=\"";
    out += cls;
    out += "\" x1=\"" + shortestDecimal(seg.a.x) + "\" y1=\"" + shortestDecimal(seg.a.y)
           + "\" x2=\"" + shortestDecimal(seg.b.x) + "\" y2=\"" + shortestDecimal(seg.b.y) + "\" vector-effect=\"non-scaling-stroke\"/>\n";
}

void appendPolylines(std::string& out, std::string_view cls, std::string_view stroke,
                     const std::vector<std::vector<Point2>>& runs) {
    for (const auto& run : runs) {
        out += "    <polyline class=\"";
        out += cls;
        out += "\" fill=\"none\" stroke=\"";
        out += stroke;
        out += "\" vector-effect=\"non-scaling-stroke\" points=\"" + pointsAttribute(run) + "\"/>\n";
    }
}

} // namespace

void PlotSpec::validate() const {
    if (widthPx <= 0 || heightPx <= 0) {
        throw InvalidConfig("plot size must be positive");
    }
    if (!(marginFraction >= 0.0 && marginFraction <= 0.45)) {
        throw InvalidConfig("plot margin fraction must be in [0, 0.45]");
    }
}

std::string writeSvg(const GpcResult& result, const PlotSpec& spec) {
    spec.validate();
    const BranchPolylines lines = branchPolylines(result);
    const Point2& focus = result.config.focus;

    std::vector<Segment> rays;
    if (spec.showRays) {
        for (const GpcSample& s : result.samples) {
            if (s.valid()) {
                rays.push_back(raySegment(focus, s));
            }
        }
    }

    BoundingBox box;
    for (const auto* group : {&lines.inner, &lines.outer}) {
        for (const auto& run : *group) {
            for (const Point2& p : run) {
                box.add(p);
            }
        }
    }
    if (spec.showBase) {
        for (const auto& run : lines.base) {
            for (const Point2& p : run) {
                box.add(p);
            }
        }
    }
    for (const Segment& seg : rays) {
        box.add(seg.a);
        box.add(seg.b);
    }
    if (spec.showFocus) {
        box.add(focus);
    }
    const double markerHalf = focusMarkerFraction * box.extent();
    if (spec.showFocus) {
        box.add({focus.x - markerHalf, focus.y - markerHalf});
        box.add({focus.x + markerHalf, focus.y + markerHalf});
    }

    const double margin = spec.marginFraction * box.extent();
    double width = box.xmax - box.xmin + 2 * margin;
    double height = box.ymax - box.ymin + 2 * margin;
    if (!(width > 0)) {
        width = 1.0;
    }
    if (!(height > 0)) {
        height = 1.0;
    }
    const double cx = 0.5 * (box.xmin + box.xmax);
    const double cy = 0.5 * (box.ymin + box.ymax);
    const double left = cx - 0.5 * width;
    const double top = cy + 0.5 * height;

    // The drawing group flips y, so the viewBox is expressed in the
    // flipped frame: its top edge sits at -top.
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
           + std::to_string(spec.widthPx) + "\" height=\"" + std::to_string(spec.heightPx)
           + "\" viewBox=\"" + shortestDecimal(left) + " " + shortestDecimal(-top) + " "
           + shortestDecimal(width) + " " + shortestDecimal(height)
           + "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    out += "  <g transform=\"scale(1,-1)\" stroke-width=\"1\">\n";

    if (spec.showBase) {
        appendPolylines(out, "base", "#000000", lines.base);
    }
    appendPolylines(out, "inner", "#1f77b4", lines.inner);
    appendPolylines(out, "outer", "#d62728", lines.outer);

    if (!rays.empty()) {
        out += "    <g class=\"rays\" stroke=\"#7f7f7f\">\n";
        for (const Segment& seg : rays) {
            out += "  ";
            appendLine(out, "ray", seg);
        }
        out += "    </g>\n";
    }

    if (spec.showFocus) {
        out += "    <g class=\"focus\" stroke=\"#000000\">\n";
        out += "  ";
        appendLine(out, "focus-mark",
                   {{focus.x - markerHalf, focus.y - markerHalf}, {focus.x + markerHalf, focus.y + markerHalf}});
        out += "  ";
        appendLine(out, "focus-mark",
                   {{focus.x - markerHalf, focus.y + markerHalf}, {focus.x + markerHalf, focus.y - markerHalf}});
        out += "    </g>\n";
    }

    out += "  </g>\n";
    out += "</svg>\n";
    return out;
}

} // namespace conchoid
