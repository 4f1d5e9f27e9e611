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

#include <conchoid/cli.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include <conchoid/errors.h>
#include <conchoid/expr.h>
#include <conchoid/format.h>
#include <conchoid/output.h>
#include <conchoid/sampler.h>

namespace conchoid::cli {

namespace {

// Options that take a value. Their values are glued to the flag before
// CLI11 sees them, so that "--x-range -3:3" is not read as a short flag.
const std::set<std::string, std::less<>> valueOptions = {
    "--focus", "--n0", "--s", "--line-y", "--x-range", "--center", "--radius", "--theta",
    "--offset", "--m", "--csv", "--svg", "--json", "--columns", "--precision",
};

std::vector<std::string> glueOptionValues(std::span<const std::string> args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (valueOptions.count(args[i]) && i + 1 < args.size()) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        }
        else {
            out.push_back(args[i]);
        }
    }
    return out;
}

// A flag value that failed to parse; exit code 2.
class FlagError : public Error {
public:
    FlagError(std::string_view flag, const std::string& message)
        : Error(std::string(flag) + ": " + message) {
    }
};

double constantFlag(std::string_view flag, const std::string& text) {
    try {
        return expr::evaluateConstant(text);
    }
    catch (const SyntaxError& e) {
        throw FlagError(flag, "'" + text + "': " + e.what());
    }
}

Point2 pointFlag(std::string_view flag, const std::string& text) {
    try {
        return parsePoint(text);
    }
    catch (const SyntaxError& e) {
        throw FlagError(flag, "'" + text + "': " + e.what());
    }
}

Range rangeFlag(std::string_view flag, const std::string& text) {
    try {
        return parseRange(text);
    }
    catch (const SyntaxError& e) {
        throw FlagError(flag, "'" + text + "': " + e.what());
    }
}

struct OutputOptions {
    std::string csvPath;
    std::string svgPath;
    std::string jsonPath;
    std::string columns;
    int precision = TableSpec::defaultPrecision;
    bool printSummary = false;
    bool showRays = false;

    void addTo(CLI::App& app) {
        app.add_option("--csv", csvPath, "Write the calculation table as CSV to PATH");
        app.add_option("--svg", svgPath, "Write the plot as SVG to PATH");
        app.add_option("--json", jsonPath, "Write the full result as JSON to PATH");
        app.add_option("--columns", columns,
                       "Comma-separated CSV column groups: k, p, l_vec, l_norm, d, p_minus_o, "
                       "p_minus_o_norm, u, q_inner, q_outer (default: all)");
        app.add_option("--precision", precision, "Decimals in CSV cells, 0 to 12")
            ->capture_default_str();
        app.add_flag("--rays", showRays, "Draw the construction rays in the SVG plot");
        app.add_flag("--print-summary", printSummary, "Print a summary of the construction");
    }

    bool any() const {
        return printSummary || !csvPath.empty() || !svgPath.empty() || !jsonPath.empty();
    }

    TableSpec tableSpec() const {
        std::vector<TableColumn> cols;
        if (columns.empty()) {
            return TableSpec(TableSpec().columns(), precision);
        }
        std::size_t start = 0;
        while (start <= columns.size()) {
            const std::size_t comma = std::min(columns.find(',', start), columns.size());
            const std::string name = columns.substr(start, comma - start);
            const auto col = tableColumnFromName(name);
            if (!col) {
                throw FlagError("--columns", "unknown column '" + name + "'");
            }
            cols.push_back(*col);
            start = comma + 1;
        }
        return TableSpec(std::move(cols), precision);
    }
};

struct CurveOptions {
    std::string focus;
    std::string offset;
    int m = GpcConfig::defaultSampleCount;

    // line
    std::string n0;
    std::string s;
    std::string lineY;
    std::string xRange;

    // arc
    std::string center;
    std::string radius;
    std::string theta;
};

void writeFile(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open '" + path + "' for writing");
    }
    file << contents;
    file.close();
    if (!file) {
        throw Error("failed writing '" + path + "'");
    }
}

std::string point(const Point2& p) {
    return "(" + shortestDecimal(p.x) + ", " + shortestDecimal(p.y) + ")";
}

void printSummary(std::ostream& out, const GpcResult& result) {
    const GpcConfig& c = result.config;
    out << "focus: " << point(c.focus) << "\n";
    if (const auto* line = std::get_if<LineSegmentCurve>(&c.curve)) {
        out << "curve: line from " << point(line->start()) << " to " << point(line->end())
            << ", length " << shortestDecimal(line->length()) << "\n";
    }
    else if (const auto* arc = std::get_if<CircularArcCurve>(&c.curve)) {
        out << "curve: arc centre " << point(arc->center()) << ", radius " << shortestDecimal(arc->radius())
            << ", theta " << shortestDecimal(arc->thetaStart()) << " to " << shortestDecimal(arc->thetaEnd())
            << ", length " << shortestDecimal(std::abs(arc->signedLength())) << "\n";
    }
    out << "offset: " << expr::render(c.offset) << "\n";
    out << "samples: " << result.samples.size() << " (valid " << result.samples.size() - result.dropped
        << ", dropped " << result.dropped << ")\n";
    out << "N: " << point(result.samples.front().p) << "\n";
    out << "S: " << point(result.samples.back().p) << "\n";
}

enum class CurveKind {
    Line,
    Arc
};

// Everything derived from flags, before any geometry is built.
struct Request {
    CurveKind kind;
    Point2 focus;
    expr::Expr offset;
    int m;
    // line
    Point2 n;
    Point2 s;
    // arc
    Point2 center;
    double radius = 0;
    Range theta{0, 0};
};

Request buildRequest(CurveKind kind, const CurveOptions& o) {
    if (o.m < 2) {
        throw FlagError("--m", "sample count must be at least 2");
    }
    expr::Expr offset = [&o] {
        try {
            return expr::parse(o.offset);
        }
        catch (const SyntaxError& e) {
            throw FlagError("--offset", "'" + o.offset + "': " + e.what());
        }
    }();
    Request r{kind, pointFlag("--focus", o.focus), std::move(offset), o.m, {}, {}, {}, 0, {0, 0}};

    if (kind == CurveKind::Line) {
        const bool endpoints = !o.n0.empty() || !o.s.empty();
        const bool horizontal = !o.lineY.empty() || !o.xRange.empty();
        if (endpoints == horizontal) {
            throw FlagError("line", "give either --n0 and --s, or --line-y and --x-range");
        }
        if (endpoints) {
            if (o.n0.empty() || o.s.empty()) {
                throw FlagError("line", "--n0 and --s must be given together");
            }
            r.n = pointFlag("--n0", o.n0);
            r.s = pointFlag("--s", o.s);
        }
        else {
            if (o.lineY.empty() || o.xRange.empty()) {
                throw FlagError("line", "--line-y and --x-range must be given together");
            }
            const double y = constantFlag("--line-y", o.lineY);
            const Range x = rangeFlag("--x-range", o.xRange);
            r.n = {x.from, y};
            r.s = {x.to, y};
        }
    }
    else {
        r.center = pointFlag("--center", o.center);
        r.radius = constantFlag("--radius", o.radius);
        r.theta = rangeFlag("--theta", o.theta);
    }
    return r;
}

GpcResult construct(const Request& r) {
    BaseCurve curve = r.kind == CurveKind::Line
                          ? BaseCurve(LineSegmentCurve(r.n, r.s))
                          : BaseCurve(CircularArcCurve(r.center, r.radius, r.theta.from, r.theta.to));
    return sampleGpc(GpcConfig{r.focus, std::move(curve), r.offset, r.m, true});
}

void emit(const GpcResult& result, const OutputOptions& o, const TableSpec& table, std::ostream& out) {
    if (!o.csvPath.empty()) {
        writeFile(o.csvPath, writeCsv(result, table));
    }
    if (!o.svgPath.empty()) {
        PlotSpec plot;
        plot.showRays = o.showRays;
        writeFile(o.svgPath, writeSvg(result, plot));
    }
    if (!o.jsonPath.empty()) {
        writeFile(o.jsonPath, writeJson(result));
    }
    if (o.printSummary) {
        printSummary(out, result);
    }
}

std::string presetListing() {
    std::string text;
    for (const Preset& p : presets()) {
        std::string line = std::string(p.name);
        line.resize(std::max<std::size_t>(line.size() + 2, 14), ' ');
        line += p.description;
        line += "\n";
        std::string argsLine = "              ";
        for (const std::string& a : p.arguments) {
            argsLine += a.find(' ') != std::string::npos ? "\"" + a + "\" " : a + " ";
        }
        argsLine.pop_back();
        text += line + argsLine + "\n";
    }
    return text;
}

} // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = {
        {"nicomedes", "Conchoid of Nicomedes: line y = 1, f(l) = 2",
         {"line", "--focus", "0,0", "--line-y", "1", "--x-range", "-3:3", "--offset", "2", "--m", "180"}},
        {"line-linear", "Line y = 1, f(l) = l",
         {"line", "--focus", "0,0", "--line-y", "1", "--x-range", "-3:3", "--offset", "l", "--m", "180"}},
        {"line-sin", "Line y = 1, f(l) = sin l",
         {"line", "--focus", "0,0", "--line-y", "1", "--x-range", "-4:4", "--offset", "sin(l)", "--m", "180"}},
        {"line-ln", "Line y = 1, f(l) = ln l",
         {"line", "--focus", "0,0", "--line-y", "1", "--x-range", "-2:2", "--offset", "ln(l)", "--m", "180"}},
        {"limacon", "Limacon of Pascal: full circle, f(l) = 136/100",
         {"arc", "--focus", "0,0", "--center", "0,113/100", "--radius", "80/100", "--theta", "0:2*pi",
          "--offset", "136/100", "--m", "180"}},
        {"circ-linear", "Full circle, f(l) = l",
         {"arc", "--focus", "0,0", "--center", "0,7/2", "--radius", "2", "--theta", "0:2*pi", "--offset", "l",
          "--m", "180"}},
        {"circ-sin", "Full circle, f(l) = 2 sin l",
         {"arc", "--focus", "0,0", "--center", "0,7/2", "--radius", "2", "--theta", "0:2*pi", "--offset",
          "2*sin(l)", "--m", "180"}},
        {"circ-ln", "Full circle, f(l) = ln l",
         {"arc", "--focus", "0,0", "--center", "0,7/2", "--radius", "2", "--theta", "0:2*pi", "--offset",
          "ln(l)", "--m", "180"}},
    };
    return all;
}

const Preset& findPreset(std::string_view name) {
    for (const Preset& p : presets()) {
        if (p.name == name) {
            return p;
        }
    }
    throw UnknownPreset("unknown preset '" + std::string(name) + "'");
}

Point2 parsePoint(std::string_view text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw SyntaxError(comma == std::string_view::npos ? text.size() : text.find(',', comma + 1),
                          "expected a point as X,Y");
    }
    return {expr::evaluateConstant(text.substr(0, comma)), expr::evaluateConstant(text.substr(comma + 1))};
}

Range parseRange(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
        throw SyntaxError(colon == std::string_view::npos ? text.size() : text.find(':', colon + 1),
                          "expected a range as A:B");
    }
    return {expr::evaluateConstant(text.substr(0, colon)), expr::evaluateConstant(text.substr(colon + 1))};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized planar conchoid generator.\n"
                 "Offsets points of a base curve along rays from a focus by d = f(l), l being the arc "
                 "length from the start of the curve, and writes the inner and outer branches.\n"
                 "Numeric values accept constant expressions such as 9/8*pi or 136/100.",
                 "conchoid"};
    app.require_subcommand(1);

    CurveOptions curve;
    OutputOptions output;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--focus", curve.focus, "Focus O as X,Y")->required();
        sub->add_option("--offset", curve.offset, "Offset function f(l), e.g. \"l + sin(l)\"")->required();
        sub->add_option("--m", curve.m, "Number of samples along the base curve (>= 2)")->capture_default_str();
        output.addTo(*sub);
    };

    CLI::App* line = app.add_subcommand("line", "Conchoid of a line segment");
    line->add_option("--n0", curve.n0, "Start point N as X,Y");
    line->add_option("--s", curve.s, "End point S as X,Y");
    line->add_option("--line-y", curve.lineY, "Horizontal line height y (with --x-range)");
    line->add_option("--x-range", curve.xRange, "Abscissae of N and S as A:B (with --line-y)");
    addCommon(line);

    CLI::App* arc = app.add_subcommand("arc", "Conchoid of a circular arc");
    arc->add_option("--center", curve.center, "Circle centre as X,Y")->required();
    arc->add_option("--radius", curve.radius, "Circle radius")->required();
    arc->add_option("--theta", curve.theta, "Start and end angles in radians as A:B")->required();
    addCommon(arc);

    std::string presetName;
    bool listPresets = false;
    CLI::App* preset = app.add_subcommand("presets", "Run or list the built-in figure parameter sets");
    preset->add_option("name", presetName, "Preset to run");
    preset->add_flag("--list", listPresets, "List the presets and their flags");
    output.addTo(*preset);

    std::vector<std::string> glued = glueOptionValues(args);
    std::reverse(glued.begin(), glued.end());
    try {
        app.parse(glued);
    }
    catch (const CLI::CallForHelp&) {
        const bool top = app.get_subcommands().empty();
        out << app.help("", top ? CLI::AppFormatMode::All : CLI::AppFormatMode::Normal);
        if (top || preset->parsed()) {
            out << "\nPresets:\n" << presetListing();
        }
        return Success;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    if (preset->parsed()) {
        if (listPresets) {
            out << presetListing();
            return Success;
        }
        if (presetName.empty()) {
            err << "error: presets needs a preset name or --list\n";
            return UsageError;
        }
        const Preset* p = nullptr;
        try {
            p = &findPreset(presetName);
        }
        catch (const UnknownPreset& e) {
            err << "error: " << e.what() << "\n";
            return UsageError;
        }
        // Output flags are forwarded verbatim after the preset's own flags.
        std::vector<std::string> rest(args.begin(), args.end());
        for (std::string_view token : {std::string_view("presets"), std::string_view(presetName)}) {
            const auto it = std::find(rest.begin(), rest.end(), token);
            if (it != rest.end()) {
                rest.erase(it);
            }
        }
        std::vector<std::string> forwarded = p->arguments;
        forwarded.insert(forwarded.end(), rest.begin(), rest.end());
        return run(forwarded, out, err);
    }

    if (!output.any()) {
        err << "error: nothing to do; give --csv, --svg, --json or --print-summary\n";
        return UsageError;
    }

    std::optional<Request> request;
    std::optional<TableSpec> table;
    try {
        request = buildRequest(line->parsed() ? CurveKind::Line : CurveKind::Arc, curve);
        table = output.tableSpec();
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    try {
        emit(construct(*request), output, *table, out);
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ConstructionError;
    }
    return Success;
}

} // namespace conchoid::cli
