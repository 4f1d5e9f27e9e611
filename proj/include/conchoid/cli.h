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

#ifndef CONCHOID_CLI_H
#define CONCHOID_CLI_H

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <conchoid/geometry.h>

namespace conchoid::cli {

enum ExitCode : int {
    Success = 0,
    UsageError = 2,
    ConstructionError = 3
};

/// Named parameter set reproducing one of the reference figures.
struct Preset {
    std::string_view name;
    std::string_view description;
    /// Subcommand followed by its flags, without output flags.
    std::vector<std::string> arguments;
};

const std::vector<Preset>& presets();

/// Throws `UnknownPreset`.
const Preset& findPreset(std::string_view name);

/// Parses "X,Y" where both coordinates are constant expressions.
/// Throws `SyntaxError`.
Point2 parsePoint(std::string_view text);

struct Range {
    double from;
    double to;
};

/// Parses "A:B" where both bounds are constant expressions.
/// Throws `SyntaxError`.
Range parseRange(std::string_view text);

/// Runs the command line `args` (program name excluded). Normal output and
/// help go to `out`, diagnostics to `err`. Returns an `ExitCode`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace conchoid::cli

#endif // CONCHOID_CLI_H
