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

#include <conchoid/curves.h>

#include <algorithm>
#include <cmath>
#include <string>

#include <conchoid/errors.h>

namespace conchoid {

void checkFraction(double k) {
    if (!(k >= 0.0 && k <= 1.0)) {
        throw ParamOutOfRange("traversal fraction " + std::to_string(k) + " is outside [0, 1]");
    }
}

// ---------------------------------------------------------------------------
// LineSegmentCurve

LineSegmentCurve::LineSegmentCurve(const Point2& n, const Point2& s)
    : n_(checkedPoint(n.x, n.y))
    , s_(checkedPoint(s.x, s.y))
    , length_((s - n).norm()) {

    if (n_ == s_) {
        throw InvalidCurve("line segment start and end points coincide");
    }
}

Point2 LineSegmentCurve::pointAt(double k) const {
    checkFraction(k);
    return n_ + (s_ - n_) * k;
}

double LineSegmentCurve::arcLengthAt(double k) const {
    checkFraction(k);
    return k * length_;
}

// ---------------------------------------------------------------------------
// CircularArcCurve

CircularArcCurve::CircularArcCurve(const Point2& center, double r, double thetaN, double thetaS)
    : center_(checkedPoint(center.x, center.y))
    , r_(r)
    , thetaN_(thetaN)
    , thetaS_(thetaS) {

    if (!std::isfinite(r) || !std::isfinite(thetaN) || !std::isfinite(thetaS)) {
        throw NonFiniteValue("circular arc parameters must be finite");
    }
    if (!(r > 0)) {
        throw InvalidCurve("circular arc radius must be positive");
    }
    if (thetaN == thetaS) {
        throw InvalidCurve("circular arc start and end angles coincide");
    }
    if (!std::isfinite(signedLength()) || signedLength() == 0) {
        throw InvalidCurve("circular arc length must be nonzero and finite");
    }
}

Point2 CircularArcCurve::pointAt(double k) const {
    checkFraction(k);
    const double theta = thetaN_ + (thetaS_ - thetaN_) * k;
    return {center_.x + r_ * std::cos(theta), center_.y + r_ * std::sin(theta)};
}

double CircularArcCurve::arcLengthAt(double k) const {
    checkFraction(k);
    return std::abs(signedLength()) * k;
}

// ---------------------------------------------------------------------------
// ParametricCurve

ParametricCurve::ParametricCurve(PositionFunction position, int subdivisions)
    : position_(std::move(position))
    , step_(1.0 / (8.0 * std::max(subdivisions, 1))) {

    if (!position_) {
        throw InvalidConfig("parametric curve needs a position function");
    }
    if (subdivisions < minSubdivisions) {
        throw InvalidConfig("parametric curve needs at least "
                            + std::to_string(minSubdivisions) + " subdivisions");
    }

    const int n = subdivisions;
    auto cumulative = std::make_shared<std::vector<double>>();
    cumulative->reserve(n + 1);
    cumulative->push_back(0.0);
    // The difference stencils stay inside [0, 1], so this probes every
    // point the curve is ever evaluated at during integration.
    for (int j = 0; j < n; ++j) {
        const double a = static_cast<double>(j) / n;
        const double b = static_cast<double>(j + 1) / n;
        const double segment = simpson(a, b);
        if (!std::isfinite(segment)) {
            throw NonFiniteCurve("parametric curve is not finite near t = " + std::to_string(a));
        }
        cumulative->push_back(cumulative->back() + segment);
    }
    cumulative_ = std::move(cumulative);
}

double ParametricCurve::speed(double t) const {
    const double h = step_;
    Vec2 derivative;
    if (t - h < 0.0) {
        const Point2 p0 = position_(t);
        const Point2 p1 = position_(t + h);
        const Point2 p2 = position_(t + 2 * h);
        derivative = ((p1 - p0) * 4.0 - (p2 - p0)) / (2 * h);
    }
    else if (t + h > 1.0) {
        const Point2 p0 = position_(t);
        const Point2 p1 = position_(t - h);
        const Point2 p2 = position_(t - 2 * h);
        derivative = ((p1 - p0) * 4.0 - (p2 - p0)) / (-2 * h);
    }
    else {
        derivative = (position_(t + h) - position_(t - h)) / (2 * h);
    }
    return derivative.norm();
}

double ParametricCurve::simpson(double a, double b) const {
    if (b <= a) {
        return 0.0;
    }
    return (b - a) / 6.0 * (speed(a) + 4.0 * speed(0.5 * (a + b)) + speed(b));
}

Point2 ParametricCurve::pointAt(double k) const {
    checkFraction(k);
    const Point2 p = position_(k);
    if (!p.isFinite()) {
        throw NonFiniteCurve("parametric curve is not finite at t = " + std::to_string(k));
    }
    return p;
}

double ParametricCurve::arcLengthAt(double k) const {
    checkFraction(k);
    const std::vector<double>& cum = *cumulative_;
    const int n = static_cast<int>(cum.size()) - 1;
    const int j = std::min(static_cast<int>(std::floor(k * n)), n - 1);
    const double a = static_cast<double>(j) / n;
    const double partial = simpson(a, k);
    return std::clamp(cum[j] + partial, cum[j], cum[j + 1]);
}

// ---------------------------------------------------------------------------
// BaseCurve dispatch

Point2 pointAt(const BaseCurve& curve, double k) {
    return std::visit([k](const auto& c) { return c.pointAt(k); }, curve);
}

double arcLengthAt(const BaseCurve& curve, double k) {
    return std::visit([k](const auto& c) { return c.arcLengthAt(k); }, curve);
}

CurveSamplePoint sampleAt(const BaseCurve& curve, double k) {
    return {k, pointAt(curve, k), arcLengthAt(curve, k)};
}

Point2 startPoint(const BaseCurve& curve) {
    return pointAt(curve, 0.0);
}

std::string_view curveKind(const BaseCurve& curve) {
    struct Visitor {
        std::string_view operator()(const LineSegmentCurve&) const {
            return "line";
        }
        std::string_view operator()(const CircularArcCurve&) const {
            return "arc";
        }
        std::string_view operator()(const ParametricCurve&) const {
            return "parametric";
        }
    };
    return std::visit(Visitor{}, curve);
}

} // namespace conchoid
