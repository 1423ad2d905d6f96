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

#include "revced/error.hpp"

namespace revced {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::WidthMismatch:
            return "WidthMismatch";
        case ErrorCode::WidthCap:
            return "WidthCap";
        case ErrorCode::BadLength:
            return "BadLength";
        case ErrorCode::DuplicateOutput:
            return "DuplicateOutput";
        case ErrorCode::MissingRow:
            return "MissingRow";
        case ErrorCode::NonBijective:
            return "NonBijective";
        case ErrorCode::DuplicateName:
            return "DuplicateName";
        case ErrorCode::UnknownGate:
            return "UnknownGate";
        case ErrorCode::MvMismatch:
            return "MvMismatch";
        case ErrorCode::BadInverseLink:
            return "BadInverseLink";
        case ErrorCode::NoInverse:
            return "NoInverse";
        case ErrorCode::InvalidCircuit:
            return "InvalidCircuit";
        case ErrorCode::MissingInput:
            return "MissingInput";
        case ErrorCode::InvalidFault:
            return "InvalidFault";
        case ErrorCode::EmptyRegion:
            return "EmptyRegion";
        case ErrorCode::BadPairing:
            return "BadPairing";
        case ErrorCode::Syntax:
            return "Syntax";
        case ErrorCode::ArityMismatch:
            return "ArityMismatch";
        case ErrorCode::DuplicateDriver:
            return "DuplicateDriver";
    }
    return "Unknown";
}

}  // namespace revced
