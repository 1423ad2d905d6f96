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

#ifndef REVCED_NETLIST_HPP
#define REVCED_NETLIST_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revced/ced.hpp"
#include "revced/circuit.hpp"
#include "revced/gate.hpp"

namespace revced {

struct SourcePos {
    size_t line = 0;
    size_t column = 0;
};

struct CircuitBlock {
    Circuit circuit;
    std::optional<CompareSpec> compare;
    SourcePos pos;
    /// Position of each gate statement, indexed like circuit.instances.
    std::vector<SourcePos> instance_pos;

    /// Positions are presentation only and do not take part in equality.
    bool operator==(const CircuitBlock &other) const {
        return circuit == other.circuit && compare == other.compare;
    }
};

/// Parsed netlist text: user gate definitions and circuit blocks.
///
/// Grammar (one statement per line, `#` starts a comment):
///
///     version 1
///     defgate NAME width=N perm=[i0,i1,...] [cost=C|none] [inverse=NAME|none]
///     defgate-mv NAME inputs=N [in=A,B,C] [cost=C|none] [inverse=NAME|none]
///         node X = MV(t,t,t)        internal majority node
///         out X = MV(t,t,t)         output node, one per output in order
///     circuit NAME mode=quantum|qca
///         input w...
///         const w = 0|1
///         gate G in... -> out... [region=R|Rinv|Rdup|copy]
///         output w...
///         garbage w...
///         compare inverse|duplicate ref... = check...
///     end
///
/// A term `t` is an input or earlier node name, optionally prefixed by `~`.
/// The first-listed wire of any list is bit 0.
struct NetlistDocument {
    std::vector<GateDef> gate_defs;
    std::vector<SourcePos> gate_pos;
    std::vector<CircuitBlock> circuits;
    /// Built-in gates followed by gate_defs.
    GateRegistry registry = builtin_registry();

    /// Throws InvalidCircuit if no circuit has that name.
    const CircuitBlock &circuit(const std::string &name) const;
    /// The block's circuit wrapped with its compare directive. Throws
    /// InvalidCircuit if the block has none.
    CedCircuit ced(const std::string &name) const;

    bool operator==(const NetlistDocument &other) const {
        return gate_defs == other.gate_defs && circuits == other.circuits;
    }
};

/// Throws ParseError carrying the line and column of the offending statement.
/// Circuit blocks must pass validate (fan-out excepted, which `verify`
/// reports separately).
NetlistDocument parse_netlist(std::string_view text);

/// Canonical text: definitions first, then circuits; one list statement each.
std::string emit_netlist(const NetlistDocument &doc);

/// A document holding `c` plus definitions of every non-built-in gate it uses.
NetlistDocument single_circuit_document(const Circuit &c, const std::optional<CompareSpec> &compare = std::nullopt);

}  // namespace revced

#endif
