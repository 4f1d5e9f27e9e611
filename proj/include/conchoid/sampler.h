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

#ifndef CONCHOID_SAMPLER_H
#define CONCHOID_SAMPLER_H

#include <optional>
#include <string_view>
#include <vector>

#include <conchoid/curves.h>
#include <conchoid/expr.h>
#include <conchoid/geometry.h>

namespace conchoid {

/// Everything needed to construct a generalized planar conchoid: the focus
/// O, the directed base curve from N to S, the offset function d = f(l) of
/// arc length, and the number of samples.
struct GpcConfig {
    static constexpr int defaultSampleCount = 180;

    Point2 focus;
    BaseCurve curve;
    expr::Expr offset;
    int m = defaultSampleCount;

    /// When true, samples with a non-finite offset or a degenerate ray are
    /// kept as invalid and left out of the branch geometry. When false, the
    /// first such sample aborts the construction with `NonFiniteOffset` or
    /// `DegenerateRay`.
    bool dropNonFinite = true;
};

enum class InvalidReason {
    None,
    NonFiniteOffset,
    DegenerateRay
};

/// "", "non-finite offset" or "degenerate ray".
std::string_view reasonText(InvalidReason reason);

/// One construction ray.
struct GpcSample {
    double k = 0;
    Point2 p;                       // P_i on the base curve
    double l = 0;                   // arc length from N to P_i
    double d = 0;                   // offset f(l); may be non-finite
    std::optional<Vec2> u;          // unit ray from the focus to P_i
    std::optional<Point2> qInner;   // P_i - d u
    std::optional<Point2> qOuter;   // P_i + d u
    InvalidReason reason = InvalidReason::None;

    bool valid() const {
        return reason == InvalidReason::None;
    }
};

struct GpcResult {
    GpcConfig config;
    std::vector<GpcSample> samples;
    int dropped = 0;
};

/// Samples the conchoid at the m fractions k_i = i / (m - 1), both
/// endpoints included.
///
/// Throws `InvalidConfig` when m < 2 and `AllSamplesInvalid` when no
/// sample has a finite offset and a well-defined ray.
GpcResult sampleGpc(const GpcConfig& config);

/// Polylines through the valid samples in k order. An invalid sample ends
/// the current run, so each list holds one sub-polyline per run of
/// consecutive valid samples.
struct BranchPolylines {
    std::vector<std::vector<Point2>> inner;
    std::vector<std::vector<Point2>> outer;
    std::vector<std::vector<Point2>> base;
};

/// Throws `AllSamplesInvalid` if the result has no valid sample.
BranchPolylines branchPolylines(const GpcResult& result);

} // namespace conchoid

#endif // CONCHOID_SAMPLER_H
