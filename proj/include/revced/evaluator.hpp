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

#ifndef REVCED_EVALUATOR_HPP
#define REVCED_EVALUATOR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "revced/circuit.hpp"
#include "revced/fault.hpp"

namespace revced {

/// Circuit compiled to wire indices for repeated evaluation.
///
/// Evaluation is const and allocation-light, so one Evaluator may be shared by
/// concurrent workers as long as each passes its own value buffer.
class Evaluator {
   public:
    /// Throws InvalidCircuit on any structural violation other than fan-out.
    explicit Evaluator(const Circuit &c);

    /// Fault prepared for the inner loop.
    struct Compiled {
        enum class Kind { Flip, Stuck, OutMask, InMask, Replace, Mv };
        Kind kind;
        size_t instance;
        size_t wire = 0;  // Flip/Stuck
        uint32_t mask = 0;
        bool value = false;
        const TruthPerm *perm = nullptr;
        MvFault mv;
    };
    /// Validates the faults; the returned data refers into `faults`.
    std::vector<Compiled> compile(std::span<const Fault> faults) const;

    /// Evaluates with bit k of `inputs` assigned to circuit input k. Writes one
    /// value per wire (see wire_names) into `values`.
    void run(uint64_t inputs, std::span<const Compiled> faults, std::vector<uint8_t> &values) const;
    std::vector<uint8_t> run(uint64_t inputs, std::span<const Compiled> faults = {}) const;

    const Circuit &circuit() const {
        return circuit_;
    }
    const std::vector<std::string> &wire_names() const {
        return names_;
    }
    /// Throws InvalidCircuit for unknown wires.
    size_t wire_index(const std::string &wire) const;
    std::vector<size_t> wire_indices(std::span<const std::string> wires) const;
    size_t input_count() const {
        return circuit_.inputs.size();
    }

   private:
    struct Step {
        const GateDef *gate;
        std::vector<size_t> in;
        std::vector<size_t> out;
    };
    Circuit circuit_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<std::pair<size_t, bool>> constants_;
    std::vector<Step> steps_;
};

/// Value of every wire after one evaluation.
using WireTrace = std::map<std::string, bool>;

/// `x` is aligned with c.inputs (bit k = input k).
WireTrace evaluate(const Circuit &c, const BitWord &x, const FaultSet &faults = {});
/// Throws MissingInput if an input has no value.
WireTrace evaluate(const Circuit &c, const std::map<std::string, bool> &x, const FaultSet &faults = {});

/// Gathers the listed wires of a trace into a word (first listed = bit 0).
BitWord trace_word(const WireTrace &trace, std::span<const std::string> wires);

}  // namespace revced

#endif
