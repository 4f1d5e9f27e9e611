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

#include <cmath>
#include <limits>

#include <json.hpp>

#include <conchoid/errors.h>

namespace conchoid {

using nlohmann::json;

namespace {

json pointJson(const Point2& p) {
    return json::array({p.x, p.y});
}

json vecJson(const Vec2& v) {
    return json::array({v.dx, v.dy});
}

json realJson(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return x > 0 ? "inf" : "-inf";
}

json curveJson(const BaseCurve& curve) {
    struct Visitor {
        json operator()(const LineSegmentCurve& c) const {
            return {{"kind", "line"}, {"n", pointJson(c.start())}, {"s", pointJson(c.end())}};
        }
        json operator()(const CircularArcCurve& c) const {
            return {{"kind", "arc"},
                    {"center", pointJson(c.center())},
                    {"radius", c.radius()},
                    {"theta_n", c.thetaStart()},
                    {"theta_s", c.thetaEnd()}};
        }
        json operator()(const ParametricCurve& c) const {
            return {{"kind", "parametric"}, {"subdivisions", c.subdivisions()}};
        }
    };
    return std::visit(Visitor{}, curve);
}

Point2 readPoint(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InvalidConfig("expected a [x, y] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

double readReal(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    const std::string s = j.get<std::string>();
    if (s == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    if (s == "nan") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    throw InvalidConfig("unrecognized real value '" + s + "'");
}

BaseCurve readCurve(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "line") {
        return LineSegmentCurve(readPoint(j.at("n")), readPoint(j.at("s")));
    }
    if (kind == "arc") {
        return CircularArcCurve(readPoint(j.at("center")), j.at("radius").get<double>(),
                                j.at("theta_n").get<double>(), j.at("theta_s").get<double>());
    }
    if (kind == "parametric") {
        throw InvalidConfig("parametric curves cannot be restored from JSON");
    }
    throw InvalidConfig("unknown curve kind '" + kind + "'");
}

InvalidReason readReason(const std::string& s) {
    for (InvalidReason r : {InvalidReason::None, InvalidReason::NonFiniteOffset, InvalidReason::DegenerateRay}) {
        if (reasonText(r) == s) {
            return r;
        }
    }
    throw InvalidConfig("unknown invalid-sample reason '" + s + "'");
}

} // namespace

std::string writeJson(const GpcResult& result) {
    const GpcConfig& config = result.config;
    json doc;
    doc["schema_version"] = jsonSchemaVersion;
    doc["config"] = {
        {"focus", pointJson(config.focus)},
        {"curve", curveJson(config.curve)},
        {"offset", expr::render(config.offset)},
        {"m", config.m},
        {"drop_nonfinite", config.dropNonFinite},
    };

    json samples = json::array();
    for (const GpcSample& s : result.samples) {
        samples.push_back({
            {"k", s.k},
            {"p", pointJson(s.p)},
            {"l", s.l},
            {"d", realJson(s.d)},
            {"u", s.u ? vecJson(*s.u) : json(nullptr)},
            {"q_inner", s.qInner ? pointJson(*s.qInner) : json(nullptr)},
            {"q_outer", s.qOuter ? pointJson(*s.qOuter) : json(nullptr)},
            {"valid", s.valid()},
            {"reason", reasonText(s.reason)},
        });
    }
    doc["samples"] = std::move(samples);
    doc["dropped"] = result.dropped;
    return doc.dump(2) + "\n";
}

GpcResult readJson(std::string_view text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("schema_version").get<int>() != jsonSchemaVersion) {
            throw InvalidConfig("unsupported schema version");
        }
        const json& cfg = doc.at("config");
        GpcResult result{
            GpcConfig{
                readPoint(cfg.at("focus")),
                readCurve(cfg.at("curve")),
                expr::parse(cfg.at("offset").get<std::string>()),
                cfg.at("m").get<int>(),
                cfg.value("drop_nonfinite", true),
            },
            {},
            doc.at("dropped").get<int>(),
        };
        for (const json& js : doc.at("samples")) {
            GpcSample s;
            s.k = js.at("k").get<double>();
            s.p = readPoint(js.at("p"));
            s.l = js.at("l").get<double>();
            s.d = readReal(js.at("d"));
            if (!js.at("u").is_null()) {
                const Point2 u = readPoint(js.at("u"));
                s.u = Vec2{u.x, u.y};
            }
            if (!js.at("q_inner").is_null()) {
                s.qInner = readPoint(js.at("q_inner"));
            }
            if (!js.at("q_outer").is_null()) {
                s.qOuter = readPoint(js.at("q_outer"));
            }
            s.reason = readReason(js.value("reason", std::string()));
            result.samples.push_back(std::move(s));
        }
        return result;
    }
    catch (const json::exception& e) {
        throw InvalidConfig(std::string("malformed result document: ") + e.what());
    }
}

} // namespace conchoid
