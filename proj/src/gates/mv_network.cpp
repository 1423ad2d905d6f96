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

#include "revced/mv_network.hpp"

#include "revced/error.hpp"

namespace revced {

void MvNetwork::check() const {
    auto check_ref = [&](const MvRef &ref, size_t limit_nodes, const std::string &where) {
        if (ref.kind == MvRef::Kind::Input && ref.index >= inputs) {
            throw Error(ErrorCode::InvalidCircuit, where + " reads input " + std::to_string(ref.index) +
                                                       " of a network with " + std::to_string(inputs) + " inputs");
        }
        if (ref.kind == MvRef::Kind::Node && ref.index >= limit_nodes) {
            throw Error(ErrorCode::InvalidCircuit, where + " reads node " + std::to_string(ref.index) +
                                                       " which is not computed before it");
        }
    };
    if (inputs == 0 || inputs > MAX_EXHAUSTIVE_WIDTH) {
        throw Error(ErrorCode::WidthCap, "majority network input count out of range");
    }
    for (size_t k = 0; k < nodes.size(); k++) {
        for (const MvRef &ref : nodes[k].operands) {
            check_ref(ref, k, "node " + std::to_string(k));
        }
    }
    for (size_t k = 0; k < outputs.size(); k++) {
        check_ref(outputs[k], nodes.size(), "output " + std::to_string(k));
    }
}

BitWord mv_eval(const MvNetwork &net, const BitWord &x, std::span<const MvFault> faults) {
    if (x.width() != net.inputs) {
        throw Error(ErrorCode::WidthMismatch, "majority network expects " + std::to_string(net.inputs) +
                                                  " inputs, got " + std::to_string(x.width()));
    }
    for (const MvFault &f : faults) {
        if (f.node >= net.nodes.size() || (f.kind == MvFault::Kind::InputBias && f.operand >= 3)) {
            throw Error(ErrorCode::InvalidFault, "majority fault references node " + std::to_string(f.node) +
                                                     " operand " + std::to_string(f.operand) + " outside network");
        }
    }

    std::vector<bool> node_values(net.nodes.size());
    auto read = [&](const MvRef &ref) {
        return ref.kind == MvRef::Kind::Input ? x[ref.index] : node_values[ref.index];
    };
    for (size_t k = 0; k < net.nodes.size(); k++) {
        const MvNode &node = net.nodes[k];
        std::array<bool, 3> v;
        for (size_t j = 0; j < 3; j++) {
            v[j] = read(node.operands[j]) != node.complemented[j];
        }
        for (const MvFault &f : faults) {
            if (f.node == k && f.kind == MvFault::Kind::InputBias) {
                v[f.operand] = f.value;
            }
        }
        bool out = majority(v[0], v[1], v[2]);
        for (const MvFault &f : faults) {
            if (f.node != k) {
                continue;
            }
            if (f.kind == MvFault::Kind::StuckAt) {
                out = f.value;
            } else if (f.kind == MvFault::Kind::OutputInvert) {
                out = !out;
            }
        }
        node_values[k] = out;
    }

    std::vector<bool> outs(net.outputs.size());
    for (size_t k = 0; k < outs.size(); k++) {
        outs[k] = read(net.outputs[k]);
    }
    return BitWord(outs);
}

TruthPerm MvNetwork::to_perm() const {
    check();
    if (outputs.size() != inputs) {
        throw Error(ErrorCode::NonBijective, "majority network has " + std::to_string(inputs) + " inputs but " +
                                                 std::to_string(outputs.size()) + " outputs");
    }
    std::vector<uint32_t> table(size_t{1} << inputs);
    for (size_t k = 0; k < table.size(); k++) {
        table[k] = mv_eval(*this, BitWord(inputs, (uint32_t)k)).value();
    }
    return TruthPerm(inputs, std::move(table));
}

}  // namespace revced
