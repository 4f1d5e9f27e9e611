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

#ifndef CONCHOID_GEOMETRY_H
#define CONCHOID_GEOMETRY_H

#include <cmath>

namespace conchoid {

/// Displacement in the plane.
struct Vec2 {
    double dx = 0;
    double dy = 0;

    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;

    constexpr Vec2 operator-() const {
        return {-dx, -dy};
    }
    constexpr Vec2 operator+(const Vec2& o) const {
        return {dx + o.dx, dy + o.dy};
    }
    constexpr Vec2 operator-(const Vec2& o) const {
        return {dx - o.dx, dy - o.dy};
    }
    constexpr Vec2 operator*(double s) const {
        return {dx * s, dy * s};
    }
    constexpr Vec2 operator/(double s) const {
        return {dx / s, dy / s};
    }
    friend constexpr Vec2 operator*(double s, const Vec2& v) {
        return v * s;
    }

    double norm() const {
        return std::hypot(dx, dy);
    }
    constexpr double squaredNorm() const {
        return dx * dx + dy * dy;
    }
    constexpr double dot(const Vec2& o) const {
        return dx * o.dx + dy * o.dy;
    }
    /// z-component of the 3D cross product.
    constexpr double cross(const Vec2& o) const {
        return dx * o.dy - dy * o.dx;
    }
    bool isFinite() const {
        return std::isfinite(dx) && std::isfinite(dy);
    }
};

/// Position in the plane.
struct Point2 {
    double x = 0;
    double y = 0;

    friend constexpr bool operator==(const Point2&, const Point2&) = default;

    constexpr Vec2 operator-(const Point2& o) const {
        return {x - o.x, y - o.y};
    }
    constexpr Point2 operator+(const Vec2& v) const {
        return {x + v.dx, y + v.dy};
    }
    constexpr Point2 operator-(const Vec2& v) const {
        return {x - v.dx, y - v.dy};
    }

    /// Distance to the origin.
    double norm() const {
        return std::hypot(x, y);
    }
    bool isFinite() const {
        return std::isfinite(x) && std::isfinite(y);
    }
};

/// Returns `(x, y)`, throwing `NonFiniteValue` if either component is NaN
/// or infinite.
Point2 checkedPoint(double x, double y);

double distance(const Point2& a, const Point2& b);

Point2 midpoint(const Point2& a, const Point2& b);

/// Inner and outer branch points of one construction ray.
struct BranchPoints {
    Point2 inner;
    Point2 outer;
};

/// Unit vector pointing from the focus `o` towards `p`.
///
/// Throws `DegenerateRay` when `|p - o| <= 1e-12 * max(1, |p|, |o|)`, i.e.
/// when the focus lies on the base curve at this sample.
Vec2 unitFromFocus(const Point2& o, const Point2& p);

/// Offsets `p` by `d` along the unit ray `u`: `inner = p - d u` and
/// `outer = p + d u`. Negative `d` swaps the geometric roles of the two
/// branches. Throws `NonFiniteOffset` when `d` is NaN or infinite.
BranchPoints branchPoints(const Point2& p, const Vec2& u, double d);

} // namespace conchoid

#endif // CONCHOID_GEOMETRY_H
