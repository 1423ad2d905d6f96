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

#ifndef REVCED_MV_NETWORK_HPP
#define REVCED_MV_NETWORK_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "revced/bitword.hpp"
#include "revced/truth_perm.hpp"

namespace revced {

/// Operand of a majority node: a primary input or an earlier node.
struct MvRef {
    enum class Kind { Input, Node };
    Kind kind = Kind::Input;
    size_t index = 0;

    static MvRef input(size_t index) {
        return {Kind::Input, index};
    }
    static MvRef node(size_t index) {
        return {Kind::Node, index};
    }
    bool operator==(const MvRef &other) const = default;
};

/// Three-input majority voter with optional inverters on its operands.
struct MvNode {
    std::array<MvRef, 3> operands;
    std::array<bool, 3> complemented{false, false, false};

    bool operator==(const MvNode &other) const = default;
};

/// Logic-level defect of a single majority node.
struct MvFault {
    enum class Kind {
        InputBias,     // operand `operand` replaced by `value` (MV(a,b,0)=ab, MV(a,b,1)=a+b)
        StuckAt,       // node output forced to `value`
        OutputInvert,  // node output complemented
    };
    Kind kind = Kind::StuckAt;
    size_t node = 0;
    size_t operand = 0;
    bool value = false;

    bool operator==(const MvFault &other) const = default;
};

/// Acyclic network of majority voters and inverters.
///
/// Names are presentation only (netlist printing); evaluation uses indices.
struct MvNetwork {
    size_t inputs = 0;
    std::vector<MvNode> nodes;
    std::vector<MvRef> outputs;
    std::vector<std::string> input_names;
    std::vector<std::string> node_names;

    bool operator==(const MvNetwork &other) const = default;

    /// Throws InvalidCircuit if a reference points forward or out of range.
    void check() const;

    /// The function computed over all 2^inputs assignments; throws NonBijective if
    /// it is not a permutation.
    TruthPerm to_perm() const;
};

BitWord mv_eval(const MvNetwork &net, const BitWord &x, std::span<const MvFault> faults = {});

inline bool majority(bool a, bool b, bool c) {
    return (a && b) || (b && c) || (a && c);
}

}  // namespace revced

#endif
