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

#ifndef CONCHOID_CURVES_H
#define CONCHOID_CURVES_H

#include <functional>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include <conchoid/geometry.h>

namespace conchoid {

// All base curves are directed and finite. They are traversed by a
// normalized fraction k in [0, 1]: k = 0 is the start point N, k = 1 the
// end point S. Arc length is always measured from N and is never negative.

/// Straight segment from `start()` (N) to `end()` (S).
class LineSegmentCurve {
public:
    /// Throws `InvalidCurve` if `n == s` or `NonFiniteValue` if any
    /// coordinate is not finite.
    LineSegmentCurve(const Point2& n, const Point2& s);

    const Point2& start() const {
        return n_;
    }
    const Point2& end() const {
        return s_;
    }
    double length() const {
        return length_;
    }

    Point2 pointAt(double k) const;
    double arcLengthAt(double k) const;

private:
    Point2 n_;
    Point2 s_;
    double length_;
};

/// Arc of the circle `center + r (cos t, sin t)` for t running from
/// `thetaStart()` to `thetaEnd()`. The end angle may be smaller than the
/// start angle, in which case the arc is traversed clockwise.
class CircularArcCurve {
public:
    /// Throws `InvalidCurve` when `r <= 0` or `thetaN == thetaS`.
    CircularArcCurve(const Point2& center, double r, double thetaN, double thetaS);

    const Point2& center() const {
        return center_;
    }
    double radius() const {
        return r_;
    }
    double thetaStart() const {
        return thetaN_;
    }
    double thetaEnd() const {
        return thetaS_;
    }

    /// Signed total length `r (thetaS - thetaN)`.
    double signedLength() const {
        return r_ * (thetaS_ - thetaN_);
    }

    Point2 pointAt(double k) const;

    /// `|L| k`, so that the argument of the offset function is never
    /// negative regardless of traversal direction.
    double arcLengthAt(double k) const;

private:
    Point2 center_;
    double r_;
    double thetaN_;
    double thetaS_;
};

/// Curve given by an arbitrary position function over t in [0, 1], for
/// base curves without a closed-form arc length (ellipses, ...).
///
/// The arc length is integrated numerically once at construction: the
/// speed |dp/dt| is estimated with second-order finite differences of step
/// `1 / (8 n)` and integrated panel by panel with Simpson's rule over
/// `n = subdivisions` uniform panels. Intermediate values of k add a
/// Simpson estimate over the partial panel, clamped to the panel bounds so
/// that the result is nondecreasing in k.
class ParametricCurve {
public:
    using PositionFunction = std::function<Point2(double)>;

    static constexpr int minSubdivisions = 16;
    static constexpr int defaultSubdivisions = 1024;

    /// Throws `InvalidConfig` when `subdivisions < 16` and `NonFiniteCurve`
    /// when `position` returns a non-finite point on the probed grid.
    explicit ParametricCurve(PositionFunction position, int subdivisions = defaultSubdivisions);

    int subdivisions() const {
        return static_cast<int>(cumulative_->size()) - 1;
    }

    double length() const {
        return cumulative_->back();
    }

    Point2 pointAt(double k) const;
    double arcLengthAt(double k) const;

private:
    double speed(double t) const;
    double simpson(double a, double b) const;

    PositionFunction position_;
    double step_;
    // Arc length at each panel boundary; shared so copies stay cheap.
    std::shared_ptr<const std::vector<double>> cumulative_;
};

/// A base curve of any supported kind.
using BaseCurve = std::variant<LineSegmentCurve, CircularArcCurve, ParametricCurve>;

/// One point of a sampled base curve.
struct CurveSamplePoint {
    double k;
    Point2 p;
    double l;
};

/// Throws `ParamOutOfRange` unless k is in [0, 1].
void checkFraction(double k);

Point2 pointAt(const BaseCurve& curve, double k);
double arcLengthAt(const BaseCurve& curve, double k);
CurveSamplePoint sampleAt(const BaseCurve& curve, double k);

/// Start point N, i.e. `pointAt(curve, 0)`.
Point2 startPoint(const BaseCurve& curve);

/// "line", "arc" or "parametric".
std::string_view curveKind(const BaseCurve& curve);

} // namespace conchoid

#endif // CONCHOID_CURVES_H
