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

#include <array>
#include <cmath>

#include <conchoid/errors.h>
#include <conchoid/format.h>

namespace conchoid {

namespace {

constexpr std::array<std::pair<std::string_view, TableColumn>, 10> columnNames = {{
    {"k", TableColumn::K},
    {"p", TableColumn::P},
    {"l_vec", TableColumn::LVec},
    {"l_norm", TableColumn::LNorm},
    {"d", TableColumn::D},
    {"p_minus_o", TableColumn::PMinusO},
    {"p_minus_o_norm", TableColumn::PMinusONorm},
    {"u", TableColumn::U},
    {"q_inner", TableColumn::QInner},
    {"q_outer", TableColumn::QOuter},
}};

void appendHeader(std::string& line, TableColumn column) {
    auto pair = [&line](std::string_view stem) {
        line.append(stem).append("_x,").append(stem).append("_y");
    };
    switch (column) {
    case TableColumn::K:
        line += "k";
        break;
    case TableColumn::P:
        pair("p");
        break;
    case TableColumn::LVec:
        pair("l");
        break;
    case TableColumn::LNorm:
        line += "l";
        break;
    case TableColumn::D:
        line += "d";
        break;
    case TableColumn::PMinusO:
        pair("p_minus_o");
        break;
    case TableColumn::PMinusONorm:
        line += "p_minus_o_norm";
        break;
    case TableColumn::U:
        pair("u");
        break;
    case TableColumn::QInner:
        pair("q_inner");
        break;
    case TableColumn::QOuter:
        pair("q_outer");
        break;
    }
}

class RowWriter {
public:
    RowWriter(std::string& line, int precision)
        : line_(line)
        , precision_(precision) {
    }

    void cell(double value) {
        separate();
        if (std::isfinite(value)) {
            line_ += fixedDecimal(value, precision_);
        }
    }

    void cell(const std::optional<double>& value) {
        if (value) {
            cell(*value);
        }
        else {
            separate();
        }
    }

    void cells(double x, double y) {
        cell(x);
        cell(y);
    }

    void cells(const std::optional<Vec2>& v) {
        cell(v ? std::optional(v->dx) : std::nullopt);
        cell(v ? std::optional(v->dy) : std::nullopt);
    }

    void cells(const std::optional<Point2>& p) {
        cell(p ? std::optional(p->x) : std::nullopt);
        cell(p ? std::optional(p->y) : std::nullopt);
    }

    void text(std::string_view s) {
        separate();
        line_ += s;
    }

private:
    void separate() {
        if (!first_) {
            line_ += ',';
        }
        first_ = false;
    }

    std::string& line_;
    int precision_;
    bool first_ = true;
};

} // namespace

std::optional<TableColumn> tableColumnFromName(std::string_view name) {
    for (const auto& [n, c] : columnNames) {
        if (n == name) {
            return c;
        }
    }
    return std::nullopt;
}

std::string_view tableColumnName(TableColumn column) {
    for (const auto& [n, c] : columnNames) {
        if (c == column) {
            return n;
        }
    }
    return "?";
}

TableSpec::TableSpec()
    : precision_(defaultPrecision) {
    for (const auto& entry : columnNames) {
        columns_.push_back(entry.second);
    }
}

TableSpec::TableSpec(std::vector<TableColumn> columns, int precision)
    : columns_(std::move(columns))
    , precision_(precision) {

    if (columns_.empty()) {
        throw InvalidConfig("a table needs at least one column");
    }
    if (precision_ < 0 || precision_ > 12) {
        throw InvalidConfig("table precision must be in [0, 12]");
    }
}

std::string writeCsv(const GpcResult& result, const TableSpec& spec) {
    const bool withReason = result.dropped > 0;
    std::string out;

    std::string header;
    for (std::size_t i = 0; i < spec.columns().size(); ++i) {
        if (i > 0) {
            header += ',';
        }
        appendHeader(header, spec.columns()[i]);
    }
    if (withReason) {
        header += ",reason";
    }
    out += header;
    out += '\n';

    const Point2 start = startPoint(result.config.curve);
    const Point2& focus = result.config.focus;
    for (const GpcSample& s : result.samples) {
        std::string line;
        RowWriter row(line, spec.precision());
        const Vec2 fromStart = s.p - start;
        const Vec2 fromFocus = s.p - focus;
        for (TableColumn column : spec.columns()) {
            switch (column) {
            case TableColumn::K:
                row.cell(s.k);
                break;
            case TableColumn::P:
                row.cells(s.p.x, s.p.y);
                break;
            case TableColumn::LVec:
                row.cells(fromStart.dx, fromStart.dy);
                break;
            case TableColumn::LNorm:
                row.cell(s.l);
                break;
            case TableColumn::D:
                row.cell(s.d);
                break;
            case TableColumn::PMinusO:
                row.cells(fromFocus.dx, fromFocus.dy);
                break;
            case TableColumn::PMinusONorm:
                row.cell(fromFocus.norm());
                break;
            case TableColumn::U:
                row.cells(s.u);
                break;
            case TableColumn::QInner:
                row.cells(s.qInner);
                break;
            case TableColumn::QOuter:
                row.cells(s.qOuter);
                break;
            }
        }
        if (withReason) {
            row.text(reasonText(s.reason));
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace conchoid
