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

#include "revced/fault.hpp"

#include "revced/error.hpp"

namespace revced {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string perm_str(const TruthPerm &p) {
    std::string out = "[";
    for (size_t k = 0; k < p.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(p(k));
    }
    return out + "]";
}

[[noreturn]] void invalid(const std::string &message) {
    throw Error(ErrorCode::InvalidFault, message);
}

}  // namespace

std::string Fault::str() const {
    std::string model_text = std::visit(
        overloaded{
            [](const BitFlip &) -> std::string { return "bitflip"; },
            [](const StuckAt &m) -> std::string { return "stuckat" + std::to_string(m.value); },
            [](const OutputMask &m) -> std::string { return "outputmask(" + m.mask.str() + ")"; },
            [](const InputMask &m) -> std::string { return "inputmask(" + m.mask.str() + ")"; },
            [](const GateReplace &m) -> std::string { return "replace" + perm_str(m.perm); },
            [](const MvInputBias &m) -> std::string {
                return "mvbias(op" + std::to_string(m.operand) + "=" + std::to_string(m.value) + ")";
            },
            [](const MvStuckAt &m) -> std::string { return "mvstuckat" + std::to_string(m.value); },
            [](const MvOutputInvert &) -> std::string { return "mvinvert"; },
        },
        model);
    std::string where = std::visit(
        overloaded{
            [](const WireSite &s) { return "wire:" + s.wire; },
            [](const InstanceSite &s) { return "inst:" + std::to_string(s.instance); },
            [](const MvNodeSite &s) { return "inst:" + std::to_string(s.instance) + "/node:" + std::to_string(s.node); },
        },
        location);
    return model_text + "@" + where;
}

size_t fault_instance(const Circuit &c, const Fault &f) {
    if (auto *s = std::get_if<WireSite>(&f.location)) {
        for (const GateInstance &inst : c.instances) {
            for (const std::string &w : inst.out_wires) {
                if (w == s->wire) {
                    return inst.id;
                }
            }
        }
        invalid("wire " + s->wire + " is not driven by a gate instance");
    }
    size_t k = std::visit(overloaded{
                              [](const WireSite &) -> size_t { return 0; },
                              [](const InstanceSite &s) { return s.instance; },
                              [](const MvNodeSite &s) { return s.instance; },
                          },
                          f.location);
    if (k >= c.instances.size()) {
        invalid("fault references instance " + std::to_string(k) + " but the circuit has " +
                std::to_string(c.instances.size()));
    }
    return k;
}

Fault check_fault(const Circuit &c, const Fault &f) {
    size_t k = fault_instance(c, f);
    const GateDef &gate = *c.instances[k].gate;
    bool wire_site = std::holds_alternative<WireSite>(f.location);
    bool inst_site = std::holds_alternative<InstanceSite>(f.location);
    bool mv_site = std::holds_alternative<MvNodeSite>(f.location);
    std::visit(overloaded{
                   [&](const BitFlip &) {
                       if (!wire_site) invalid("bit flips apply to wires");
                   },
                   [&](const StuckAt &) {
                       if (!wire_site) invalid("stuck-at faults apply to wires");
                   },
                   [&](const OutputMask &m) {
                       if (!inst_site) invalid("output masks apply to gate instances");
                       if (m.mask.width() != gate.width() || !m.mask.any())
                           invalid("output mask must be a nonzero word of the gate's width");
                   },
                   [&](const InputMask &m) {
                       if (!inst_site) invalid("input masks apply to gate instances");
                       if (m.mask.width() != gate.width() || !m.mask.any())
                           invalid("input mask must be a nonzero word of the gate's width");
                   },
                   [&](const GateReplace &m) {
                       if (!inst_site) invalid("gate replacement applies to gate instances");
                       if (m.perm.width() != gate.width()) invalid("replacement permutation has the wrong width");
                       if (m.perm == gate.perm) invalid("replacement permutation equals the original gate");
                   },
                   [&](const auto &) {
                       if (!mv_site) invalid("majority-node faults apply to majority nodes");
                   },
               },
               f.model);
    if (mv_site) {
        const auto &site = std::get<MvNodeSite>(f.location);
        if (!gate.mv_network) {
            invalid("gate " + gate.name + " has no majority network");
        }
        if (site.node >= gate.mv_network->nodes.size()) {
            invalid("gate " + gate.name + " has no majority node " + std::to_string(site.node));
        }
        if (auto *bias = std::get_if<MvInputBias>(&f.model); bias && bias->operand >= 3) {
            invalid("majority operand index must be 0, 1 or 2");
        }
    }
    Fault out = f;
    out.region = c.instances[k].region;
    return out;
}

}  // namespace revced
