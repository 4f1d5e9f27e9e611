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

#include <conchoid/sampler.h>

#include <cmath>
#include <string>

#include <conchoid/errors.h>

namespace conchoid {

std::string_view reasonText(InvalidReason reason) {
    switch (reason) {
    case InvalidReason::None:
        return "";
    case InvalidReason::NonFiniteOffset:
        return "non-finite offset";
    case InvalidReason::DegenerateRay:
        return "degenerate ray";
    }
    return "";
}

namespace {

GpcSample sampleOne(const GpcConfig& config, double k) {
    GpcSample s;
    s.k = k;
    s.p = pointAt(config.curve, k);
    s.l = arcLengthAt(config.curve, k);
    s.d = expr::evaluate(config.offset, s.l);

    if (!std::isfinite(s.d)) {
        if (!config.dropNonFinite) {
            throw NonFiniteOffset("offset f(" + std::to_string(s.l) + ") is not finite at k = "
                                  + std::to_string(k));
        }
        s.reason = InvalidReason::NonFiniteOffset;
        return s;
    }

    try {
        s.u = unitFromFocus(config.focus, s.p);
    }
    catch (const DegenerateRay&) {
        if (!config.dropNonFinite) {
            throw;
        }
        s.reason = InvalidReason::DegenerateRay;
        return s;
    }

    const BranchPoints q = branchPoints(s.p, *s.u, s.d);
    s.qInner = q.inner;
    s.qOuter = q.outer;
    return s;
}

} // namespace

GpcResult sampleGpc(const GpcConfig& config) {
    if (config.m < 2) {
        throw InvalidConfig("sample count m must be at least 2, got " + std::to_string(config.m));
    }
    if (!config.focus.isFinite()) {
        throw NonFiniteValue("focus must be finite");
    }

    GpcResult result{config, {}, 0};
    result.samples.reserve(config.m);
    const int last = config.m - 1;
    for (int i = 0; i <= last; ++i) {
        const double k = static_cast<double>(i) / last;
        GpcSample s = sampleOne(config, k);
        if (!s.valid()) {
            ++result.dropped;
        }
        result.samples.push_back(std::move(s));
    }
    if (result.dropped == config.m) {
        throw AllSamplesInvalid("all " + std::to_string(config.m) + " samples are invalid");
    }
    return result;
}

BranchPolylines branchPolylines(const GpcResult& result) {
    BranchPolylines lines;
    bool inRun = false;
    for (const GpcSample& s : result.samples) {
        if (!s.valid()) {
            inRun = false;
            continue;
        }
        if (!inRun) {
            lines.inner.emplace_back();
            lines.outer.emplace_back();
            lines.base.emplace_back();
            inRun = true;
        }
        lines.inner.back().push_back(*s.qInner);
        lines.outer.back().push_back(*s.qOuter);
        lines.base.back().push_back(s.p);
    }
    if (lines.inner.empty()) {
        throw AllSamplesInvalid("result has no valid sample");
    }
    return lines;
}

} // namespace conchoid
