// Copyright 2026 The revced Authors
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

#ifndef REVCED_ERROR_HPP
#define REVCED_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace revced {

enum class ErrorCode {
    WidthMismatch,
    WidthCap,
    BadLength,
    DuplicateOutput,
    MissingRow,
    NonBijective,
    DuplicateName,
    UnknownGate,
    MvMismatch,
    BadInverseLink,
    NoInverse,
    InvalidCircuit,
    MissingInput,
    InvalidFault,
    EmptyRegion,
    BadPairing,
    Syntax,
    ArityMismatch,
    DuplicateDriver,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every recoverable failure raised by the library.
class Error : public std::invalid_argument {
   public:
    Error(ErrorCode code, const std::string &message) : std::invalid_argument(message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Netlist failures carry the 1-based line and column of the offending token.
class ParseError : public Error {
   public:
    ParseError(ErrorCode code, size_t line, size_t column, const std::string &message)
        : Error(code, "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          detail_(message) {
    }
    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }
    const std::string &detail() const {
        return detail_;
    }

   private:
    size_t line_;
    size_t column_;
    std::string detail_;
};

}  // namespace revced

#endif
