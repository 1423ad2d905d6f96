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

#ifndef REVCED_CIRCUIT_HPP
#define REVCED_CIRCUIT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revced/gate.hpp"

namespace revced {

/// Wiring discipline. Quantum circuits forbid fan-out; QCA circuits allow it.
enum class Mode { Quantum, Qca };

/// Role of an instance inside an error-detecting wrapper.
enum class Region { None, R, Rinv, Rdup, Copy };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);
std::string_view region_name(Region region);
std::optional<Region> parse_region(std::string_view text);

struct GateInstance {
    GatePtr gate;
    std::vector<std::string> in_wires;
    std::vector<std::string> out_wires;
    size_t id = 0;
    Region region = Region::None;

    bool operator==(const GateInstance &other) const;
};

/// Staged netlist over named single-driver wires.
///
/// Wires are defined by circuit inputs, constants, or exactly one instance
/// output; an instance may only read wires defined before it.
struct Circuit {
    std::string name;
    Mode mode = Mode::Quantum;
    std::vector<std::string> inputs;
    std::vector<std::pair<std::string, bool>> constants;
    std::vector<GateInstance> instances;
    std::vector<std::string> outputs;
    std::optional<std::vector<std::string>> declared_garbage;

    Circuit &add_input(std::string wire);
    Circuit &add_const(std::string wire, bool value);
    /// Appends an instance with the next sequential id and returns that id.
    size_t add_gate(GatePtr gate, std::vector<std::string> in, std::vector<std::string> out,
                    Region region = Region::None);
    Circuit &add_output(std::string wire);

    /// Inputs, constants, then instance outputs in order.
    std::vector<std::string> wires() const;
    /// Wires that are neither read by an instance nor primary outputs.
    std::vector<std::string> sinks() const;
    bool is_constant(const std::string &wire) const;

    bool operator==(const Circuit &other) const = default;
};

struct Violation {
    enum class Kind {
        UndefinedWire,
        MultipleDrivers,
        FanOut,
        UndrivenOutput,
        ArityMismatch,
        DuplicatePort,
        BadInstanceId,
        UnknownGate,
        GarbageNotSink,
    };
    Kind kind;
    std::string wire;
    std::optional<size_t> instance;
    std::string message;
};

std::string_view violation_kind_name(Violation::Kind kind);

std::vector<Violation> validate(const Circuit &c);

struct Metrics {
    int gate_count = 0;
    int garbage_count = 0;
    int delay_levels = 0;
    /// Empty when some gate carries no cost ("unknown").
    std::optional<int> quantum_cost;

    bool operator==(const Metrics &other) const = default;
};

Metrics metrics(const Circuit &c);

/// ASAP level of each instance (1-based); sources read only inputs/constants.
std::vector<int> instance_levels(const Circuit &c);

enum class WireRole { Primary, RegeneratedInput, RestoredConstant, Garbage };
std::string_view wire_role_name(WireRole role);

struct WireLabel {
    std::string wire;
    WireRole role;
    /// Matching input or constant wire for regenerated / restored labels.
    std::string source;
};

/// Labels every primary output and sink wire.
///
/// A sink is a regenerated input or restored constant only when the sinks
/// reproduce the complete input vector: every circuit input is matched to a
/// distinct sink that equals it on all assignments. Otherwise every non-primary
/// sink is garbage. Equivalence is exhaustive over the free inputs.
std::vector<WireLabel> garbage_classify(const Circuit &c);

/// Exhaustive function of a circuit: rows indexed by the input encoding.
struct TruthTable {
    std::vector<std::string> input_wires;
    /// Primary outputs first, then the remaining sinks.
    std::vector<std::string> output_wires;
    size_t primary_count = 0;
    size_t rows = 0;
    std::vector<uint8_t> cells;  // rows * output_wires.size(), row-major

    bool at(size_t row, size_t column) const {
        return cells[row * output_wires.size() + column] != 0;
    }
    std::string row_str(size_t row) const;
};

/// Throws WidthCap for more than 20 inputs.
TruthTable truth_function(const Circuit &c);

/// Replaces every multiply-read wire by a balanced tree of FG copies fed with
/// fresh constant-0 ancillas. Copy instances are tagged Region::Copy. QCA
/// circuits are returned unchanged.
Circuit legalize_fanout(const Circuit &c);

/// Returns a wire name not in `taken`, starting from `base`, and records it.
std::string fresh_wire_name(std::vector<std::string> &taken, const std::string &base);

}  // namespace revced

#endif
