// Copyright 2026 The cohkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COH_ERRORS_H
#define COH_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coh {

/// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct DimensionLimit : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct InvalidTriggerSet : Error {
    using Error::Error;
};

struct NotDephasingCovariant : Error {
    using Error::Error;
};

struct UnknownGadget : Error {
    using Error::Error;
};

/// A gate that is neither incoherent nor a (controlled-)Hadamard.
struct UnclassifiableGate : Error {
    using Error::Error;
};

/// Circuit text rejected by the parser. Line and column are 1-based.
struct ParseError : Error {
    enum class Kind { Syntax, UnknownGate, WireRange, UnwrittenBit };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string &message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          kind(kind),
          line(line),
          column(column) {
    }

    Kind kind;
    std::size_t line;
    std::size_t column;
};

}  // namespace coh

#endif
