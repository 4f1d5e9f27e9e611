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

#ifndef CONCHOID_ERRORS_H
#define CONCHOID_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conchoid {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The construction ray is undefined because the sampled point coincides
/// with the focus.
class DegenerateRay : public Error {
public:
    using Error::Error;
};

class NonFiniteOffset : public Error {
public:
    using Error::Error;
};

class NonFiniteValue : public Error {
public:
    using Error::Error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

/// A curve was constructed from parameters violating its invariants
/// (coincident endpoints, zero radius, empty angular span, ...).
class InvalidCurve : public Error {
public:
    using Error::Error;
};

class NonFiniteCurve : public InvalidCurve {
public:
    using InvalidCurve::InvalidCurve;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class AllSamplesInvalid : public Error {
public:
    using Error::Error;
};

/// Malformed offset expression. `position()` is the 0-based byte offset
/// at which the problem was detected.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax error at position " + std::to_string(position) + ": " + message)
        , position_(position)
        , message_(message) {
    }

    std::size_t position() const noexcept {
        return position_;
    }

    const std::string& message() const noexcept {
        return message_;
    }

private:
    std::size_t position_;
    std::string message_;
};

class UnknownIdentifier : public SyntaxError {
public:
    UnknownIdentifier(std::size_t position, const std::string& name)
        : SyntaxError(position, "unknown identifier '" + name + "'")
        , name_(name) {
    }

    const std::string& name() const noexcept {
        return name_;
    }

private:
    std::string name_;
};

class UnknownPreset : public Error {
public:
    using Error::Error;
};

} // namespace conchoid

#endif // CONCHOID_ERRORS_H
