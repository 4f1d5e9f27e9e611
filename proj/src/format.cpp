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

#include <conchoid/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace conchoid {

std::string shortestDecimal(double x) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), result.ptr);
}

std::string fixedDecimal(double x, int precision) {
    precision = std::max(precision, 0);
    if (x == 0 || !std::isfinite(x)) {
        return x == 0 ? (precision > 0 ? "0." + std::string(precision, '0') : "0") : shortestDecimal(x);
    }

    // Shortest significand digits and decimal exponent of |x|.
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(x),
                                      std::chars_format::scientific);
    const std::string sci(buf.data(), result.ptr);
    const std::size_t ePos = sci.find('e');
    std::string significand;
    for (std::size_t i = 0; i < ePos; ++i) {
        if (sci[i] != '.') {
            significand += sci[i];
        }
    }
    const int exponent = std::atoi(sci.c_str() + ePos + 1);

    // Lay the digits out as integer part followed by fraction.
    const int pointPos = exponent + 1;
    std::string digits;
    int intLen = 0;
    if (pointPos <= 0) {
        digits = std::string(-pointPos, '0') + significand;
    }
    else {
        digits = significand;
        if (static_cast<int>(digits.size()) < pointPos) {
            digits.append(pointPos - digits.size(), '0');
        }
        intLen = pointPos;
    }

    const std::size_t keep = static_cast<std::size_t>(intLen + precision);
    bool roundUp = false;
    if (digits.size() > keep) {
        roundUp = digits[keep] >= '5';
        digits.resize(keep);
    }
    else {
        digits.append(keep - digits.size(), '0');
    }
    if (roundUp) {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[i] == '9') {
                digits[i] = '0';
            }
            else {
                ++digits[i];
                break;
            }
        }
        if (i < 0) {
            digits.insert(digits.begin(), '1');
            ++intLen;
        }
    }

    std::string out;
    const bool isZero = std::all_of(digits.begin(), digits.end(), [](char c) { return c == '0'; });
    if (x < 0 && !isZero) {
        out += '-';
    }
    out += intLen > 0 ? digits.substr(0, intLen) : "0";
    if (precision > 0) {
        out += '.';
        out += digits.substr(intLen);
    }
    return out;
}

} // namespace conchoid
