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

#include <conchoid/geometry.h>

#include <algorithm>
#include <string>

#include <conchoid/errors.h>

namespace conchoid {

namespace {

constexpr double degeneracyTolerance = 1e-12;

} // namespace

Point2 checkedPoint(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw NonFiniteValue("point has a non-finite coordinate");
    }
    return {x, y};
}

double distance(const Point2& a, const Point2& b) {
    return (b - a).norm();
}

Point2 midpoint(const Point2& a, const Point2& b) {
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

Vec2 unitFromFocus(const Point2& o, const Point2& p) {
    const Vec2 v = p - o;
    const double len = v.norm();
    const double scale = std::max({1.0, p.norm(), o.norm()});
    if (!(len > degeneracyTolerance * scale)) {
        throw DegenerateRay("point (" + std::to_string(p.x) + ", " + std::to_string(p.y)
                            + ") coincides with the focus");
    }
    return v / len;
}

BranchPoints branchPoints(const Point2& p, const Vec2& u, double d) {
    if (!std::isfinite(d)) {
        throw NonFiniteOffset("offset distance is not finite");
    }
    const Vec2 offset = u * d;
    return {p - offset, p + offset};
}

} // namespace conchoid
