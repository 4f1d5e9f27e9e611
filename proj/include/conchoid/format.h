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

#ifndef CONCHOID_FORMAT_H
#define CONCHOID_FORMAT_H

#include <string>

namespace conchoid {

// Locale-independent number formatting.

/// Shortest decimal text that parses back to exactly `x`.
std::string shortestDecimal(double x);

/// `x` with exactly `precision` fractional digits, rounded half away from
/// zero. The rounding is applied to the shortest round-trip decimal form of
/// `x`, so 0.0005 becomes "0.001" at precision 3. A result that rounds to
/// zero is printed without a sign. Requires a finite `x`.
std::string fixedDecimal(double x, int precision);

} // namespace conchoid

#endif // CONCHOID_FORMAT_H
