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

#ifndef REVCED_FAULT_HPP
#define REVCED_FAULT_HPP

#include <string>
#include <variant>
#include <vector>

#include "revced/circuit.hpp"

namespace revced {

/// Transient flip of a wire value.
struct BitFlip {
    bool operator==(const BitFlip &) const = default;
};
/// Permanent force of a wire value.
struct StuckAt {
    bool value = false;
    bool operator==(const StuckAt &) const = default;
};
/// XOR of `mask` onto an instance's whole output vector (multi-bit error).
struct OutputMask {
    BitWord mask;
    bool operator==(const OutputMask &) const = default;
};
/// XOR of `mask` onto the vector an instance reads.
struct InputMask {
    BitWord mask;
    bool operator==(const InputMask &) const = default;
};
/// Instance computes a different bijection.
struct GateReplace {
    TruthPerm perm;
    bool operator==(const GateReplace &) const = default;
};
/// Majority operand replaced by a constant (missing/additional cell defect).
struct MvInputBias {
    size_t operand = 0;
    bool value = false;
    bool operator==(const MvInputBias &) const = default;
};
struct MvStuckAt {
    bool value = false;
    bool operator==(const MvStuckAt &) const = default;
};
struct MvOutputInvert {
    bool operator==(const MvOutputInvert &) const = default;
};

using FaultModel =
    std::variant<BitFlip, StuckAt, OutputMask, InputMask, GateReplace, MvInputBias, MvStuckAt, MvOutputInvert>;

/// Output of the instance that drives `wire`.
struct WireSite {
    std::string wire;
    bool operator==(const WireSite &) const = default;
};
struct InstanceSite {
    size_t instance = 0;
    bool operator==(const InstanceSite &) const = default;
};
struct MvNodeSite {
    size_t instance = 0;
    size_t node = 0;
    bool operator==(const MvNodeSite &) const = default;
};

using FaultLocation = std::variant<WireSite, InstanceSite, MvNodeSite>;

struct Fault {
    FaultLocation location;
    FaultModel model;
    /// Region of the instance the fault sits in; filled by check_fault.
    Region region = Region::None;

    bool operator==(const Fault &) const = default;
    std::string str() const;
};

/// Faults injected together during one evaluation.
using FaultSet = std::vector<Fault>;

/// Index of the instance a fault sits in (the driver for wire faults).
size_t fault_instance(const Circuit &c, const Fault &f);

/// Throws InvalidFault unless the location exists and the model fits it.
/// Returns the fault with its region resolved.
Fault check_fault(const Circuit &c, const Fault &f);

}  // namespace revced

#endif
