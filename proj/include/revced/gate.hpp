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

#ifndef REVCED_GATE_HPP
#define REVCED_GATE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revced/mv_network.hpp"
#include "revced/truth_perm.hpp"

namespace revced {

/// A named reversible gate.
struct GateDef {
    std::string name;
    TruthPerm perm = TruthPerm::identity(1);
    std::optional<int> quantum_cost;
    std::optional<std::string> inverse_name;
    std::optional<MvNetwork> mv_network;

    size_t width() const {
        return perm.width();
    }
    bool operator==(const GateDef &other) const = default;
};

using GatePtr = std::shared_ptr<const GateDef>;

BitWord gate_eval(const GateDef &g, const BitWord &x);

/// Gate library keyed by name. Registration order is preserved.
class GateRegistry {
   public:
    /// Validates and stores a gate.
    ///
    /// Errors: DuplicateName, MvMismatch (network disagrees with perm on some
    /// input), BadInverseLink (a named inverse that exists is not the inverse).
    GatePtr add(GateDef def);

    bool contains(const std::string &name) const;
    /// Throws UnknownGate.
    GatePtr get(const std::string &name) const;
    const GateDef &lookup(const std::string &name) const {
        return *get(name);
    }
    const std::vector<GatePtr> &gates() const {
        return order_;
    }

    /// The gate registered as the inverse of `g`, following either direction of
    /// an inverse link. Null if there is none.
    GatePtr registered_inverse(const GateDef &g) const;

   private:
    std::map<std::string, GatePtr> by_name_;
    std::vector<GatePtr> order_;
};

/// NOT, FG, TOF, FRE, OTG, IOTG, QCA1, QCA2, IQCA1, IQCA2.
const GateRegistry &builtin_gates();
GateRegistry builtin_registry();
bool is_builtin_gate(const GateDef &g);

/// Registered inverse when one exists; otherwise a new gate `<name>_INV` with the
/// inverted permutation and the forward gate's quantum cost.
GatePtr derive_inverse(const GatePtr &g, const GateRegistry *registry = nullptr);

struct XorBound {
    int xor_count = 0;
    int and_count = 0;
    bool operator==(const XorBound &other) const = default;
};

/// XOR/AND counting lower bound on quantum cost.
///
/// Each output's ANF is reduced by greedily substituting earlier outputs whose
/// monomial sets fit inside it (largest first, earliest on ties). An output
/// then costs one XOR per operand beyond the first. Each distinct product term
/// of degree two or more counts as one AND.
XorBound xor_lower_bound(const GateDef &g);

}  // namespace revced

#endif
