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

#ifndef REVCED_CED_HPP
#define REVCED_CED_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revced/circuit.hpp"

namespace revced {

enum class Scheme { InverseCompare, DuplicateCompare };

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view text);

/// Which wires the ideal comparator checks against each other.
struct CompareSpec {
    Scheme scheme = Scheme::InverseCompare;
    /// Original inputs (inverse scheme) or copy-1 primary outputs (duplicate).
    std::vector<std::string> reference;
    /// Regenerated inputs (inverse scheme) or copy-2 primary outputs (duplicate).
    std::vector<std::string> check;

    bool operator==(const CompareSpec &other) const = default;
};

/// An error-detecting wrapper around a circuit R.
///
/// `circuit` holds every instance tagged R / Rinv / copy (inverse scheme) or
/// R / Rdup / copy (duplicate scheme). The comparator is ideal and lives
/// outside the netlist.
struct CedCircuit {
    Circuit circuit;
    /// The wrapped circuit; empty when loaded from a netlist.
    std::optional<Circuit> base;
    CompareSpec compare;
    /// R's line ends: the vector handed from R to the rest of the wrapper.
    std::vector<std::string> boundary_wires;

    Scheme scheme() const {
        return compare.scheme;
    }
    const std::vector<std::string> &original_inputs() const {
        return compare.reference;
    }
    const std::vector<std::string> &regenerated_wires() const {
        return compare.check;
    }
    const std::vector<std::string> &primary_outputs() const {
        return circuit.outputs;
    }
};

struct ComparatorVerdict {
    bool flag = false;
    std::vector<size_t> mismatch_positions;
};

/// Ideal bitwise comparator. Throws WidthMismatch.
ComparatorVerdict compare(const BitWord &original, const BitWord &regenerated);

/// R, then (quantum mode) an FG copy of each primary output, then R' = the
/// reversed cascade of per-gate inverses. Garbage lines of R feed R' directly.
///
/// Inverses come from `registry` links, then built-in links, then derivation
/// (unless `derive` is false, in which case a missing inverse throws NoInverse).
CedCircuit build_inverse_compare(const Circuit &r, const GateRegistry *registry = nullptr, bool derive = true);

/// Two copies of R over distinct wires; inputs reach both via FG trees
/// (quantum) or plain fan-out (QCA). The comparator checks copy 1's primary
/// outputs against copy 2's.
CedCircuit build_duplicate_compare(const Circuit &r);

/// Wraps a tagged circuit (e.g. one loaded from a netlist). Throws
/// InvalidCircuit if the comparator wires are unknown or unequal in number.
CedCircuit ced_from_tagged(Circuit c, CompareSpec directive);

/// Wires defined in R (inputs, constants R reads, R outputs) that no R
/// instance reads. Untagged instances count as R.
std::vector<std::string> r_boundary(const Circuit &c);

/// Inverse circuit: the reversed cascade of gate inverses, reusing R's wire
/// names. Its inputs are R's line ends and its outputs R's inputs then
/// constants. Throws InvalidCircuit if an internal wire fans out.
Circuit invert_circuit(const Circuit &r, const GateRegistry *registry = nullptr);

struct RegenerationCheck {
    size_t passing = 0;
    size_t total = 0;
    bool ok() const {
        return passing == total;
    }
};

/// Fault-free comparator outcome over every input assignment.
RegenerationCheck check_regeneration(const CedCircuit &ced);

}  // namespace revced

#endif
