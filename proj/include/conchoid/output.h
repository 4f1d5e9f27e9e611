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

#ifndef CONCHOID_OUTPUT_H
#define CONCHOID_OUTPUT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <conchoid/sampler.h>

namespace conchoid {

/// Column groups of a calculation table. Vector-valued groups expand to an
/// `_x` and a `_y` column.
enum class TableColumn {
    K,           // k
    P,           // p_x, p_y
    LVec,        // l_x, l_y: p - N
    LNorm,       // l: arc length from N
    D,           // d
    PMinusO,     // p_minus_o_x, p_minus_o_y
    PMinusONorm, // p_minus_o_norm
    U,           // u_x, u_y
    QInner,      // q_inner_x, q_inner_y
    QOuter       // q_outer_x, q_outer_y
};

/// Accepts "k", "p", "l_vec", "l_norm", "d", "p_minus_o",
/// "p_minus_o_norm", "u", "q_inner" and "q_outer".
std::optional<TableColumn> tableColumnFromName(std::string_view name);
std::string_view tableColumnName(TableColumn column);

class TableSpec {
public:
    static constexpr int defaultPrecision = 3;

    /// Every column, in the order listed in `TableColumn`.
    TableSpec();

    /// Throws `InvalidConfig` unless `precision` is in [0, 12] and
    /// `columns` is nonempty.
    TableSpec(std::vector<TableColumn> columns, int precision = defaultPrecision);

    const std::vector<TableColumn>& columns() const {
        return columns_;
    }
    int precision() const {
        return precision_;
    }

private:
    std::vector<TableColumn> columns_;
    int precision_;
};

/// Writes one row per sample under a header row. Cells are printed with
/// `spec.precision()` decimals rounded half away from zero; cells that are
/// undefined or non-finite for a sample are left empty. When the result has
/// invalid samples a trailing `reason` column says why each was dropped.
std::string writeCsv(const GpcResult& result, const TableSpec& spec = {});

struct PlotSpec {
    int widthPx = 800;
    int heightPx = 800;
    double marginFraction = 0.05;
    bool showRays = false;
    bool showBase = true;
    bool showFocus = true;

    /// Throws `InvalidConfig` on a non-positive size or a margin fraction
    /// outside [0, 0.45].
    void validate() const;
};

/// SVG 1.1 document with the branches drawn in data coordinates, y axis up
/// and equal aspect ratio. Polylines carry the classes "inner", "outer" and
/// "base"; the focus is a cross in a group of class "focus"; rays are
/// `line` elements of class "ray". Invalid samples are not drawn.
///
/// Throws `AllSamplesInvalid` if nothing can be drawn.
std::string writeSvg(const GpcResult& result, const PlotSpec& spec = {});

inline constexpr int jsonSchemaVersion = 1;

/// JSON document (schema version 1) with the configuration echo, every
/// sample and the dropped count. Finite doubles round-trip exactly;
/// non-finite offsets are written as the strings "inf", "-inf" or "nan".
std::string writeJson(const GpcResult& result);

/// Inverse of `writeJson`. Throws `InvalidConfig` on schema violations and
/// for parametric curves, whose position function cannot be serialized.
GpcResult readJson(std::string_view text);

} // namespace conchoid

#endif // CONCHOID_OUTPUT_H
