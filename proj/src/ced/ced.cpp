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

#include "revced/ced.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "revced/error.hpp"
#include "revced/evaluator.hpp"

namespace revced {

std::string_view scheme_name(Scheme scheme) {
    return scheme == Scheme::InverseCompare ? "inverse" : "duplicate";
}

std::optional<Scheme> parse_scheme(std::string_view text) {
    if (text == "inverse") {
        return Scheme::InverseCompare;
    }
    if (text == "duplicate") {
        return Scheme::DuplicateCompare;
    }
    return std::nullopt;
}

ComparatorVerdict compare(const BitWord &original, const BitWord &regenerated) {
    BitWord diff = original ^ regenerated;
    ComparatorVerdict v;
    for (size_t k = 0; k < diff.width(); k++) {
        if (diff[k]) {
            v.mismatch_positions.push_back(k);
        }
    }
    v.flag = !v.mismatch_positions.empty();
    return v;
}

namespace {

void require_valid(const Circuit &r) {
    std::vector<Violation> violations = validate(r);
    if (!violations.empty()) {
        throw Error(ErrorCode::InvalidCircuit, "circuit " + r.name + ": " + violations.front().message);
    }
}

/// Every wire is read by at most one instance; otherwise the cascade has no
/// well-defined reverse.
void require_no_internal_fanout(const Circuit &r) {
    std::set<std::string> read;
    for (const GateInstance &inst : r.instances) {
        for (const std::string &w : inst.in_wires) {
            if (!read.insert(w).second) {
                throw Error(ErrorCode::InvalidCircuit,
                            "circuit " + r.name + ": wire " + w + " feeds several gates, so the cascade has no inverse");
            }
        }
    }
}

bool is_r(Region region) {
    return region == Region::R || region == Region::None;
}

/// Wires no gate reads, in definition order.
std::vector<std::string> line_ends(const Circuit &r) {
    std::set<std::string> read;
    for (const GateInstance &inst : r.instances) {
        read.insert(inst.in_wires.begin(), inst.in_wires.end());
    }
    std::vector<std::string> out;
    for (const std::string &w : r.wires()) {
        if (!read.count(w)) {
            out.push_back(w);
        }
    }
    return out;
}

GatePtr inverse_gate(const GatePtr &g, const GateRegistry *registry, bool derive) {
    GatePtr inv = derive_inverse(g, registry);
    auto registered_in = [&](const GateRegistry &reg) {
        return reg.contains(inv->name) && reg.get(inv->name) == inv;
    };
    bool known = inv == g || registered_in(builtin_gates()) || (registry && registered_in(*registry));
    if (!derive && !known) {
        throw Error(ErrorCode::NoInverse, "gate " + g->name + " has no registered inverse");
    }
    return inv;
}

std::vector<std::string> line_names(const Circuit &r) {
    std::vector<std::string> lines = r.inputs;
    for (const auto &[w, v] : r.constants) {
        lines.push_back(w);
    }
    return lines;
}

}  // namespace

std::vector<std::string> r_boundary(const Circuit &c) {
    std::set<std::string> read_by_r;
    for (const GateInstance &inst : c.instances) {
        if (is_r(inst.region)) {
            read_by_r.insert(inst.in_wires.begin(), inst.in_wires.end());
        }
    }
    std::vector<std::string> defined = c.inputs;
    for (const auto &[w, v] : c.constants) {
        if (read_by_r.count(w)) {
            defined.push_back(w);
        }
    }
    for (const GateInstance &inst : c.instances) {
        if (is_r(inst.region)) {
            defined.insert(defined.end(), inst.out_wires.begin(), inst.out_wires.end());
        }
    }
    std::vector<std::string> out;
    for (const std::string &w : defined) {
        if (!read_by_r.count(w)) {
            out.push_back(w);
        }
    }
    return out;
}

CedCircuit build_inverse_compare(const Circuit &r, const GateRegistry *registry, bool derive) {
    require_valid(r);
    require_no_internal_fanout(r);

    Circuit c;
    c.name = r.name + "_ced";
    c.mode = r.mode;
    c.inputs = r.inputs;
    c.constants = r.constants;
    for (const GateInstance &inst : r.instances) {
        c.add_gate(inst.gate, inst.in_wires, inst.out_wires, Region::R);
    }
    c.outputs = r.outputs;

    std::vector<std::string> taken = r.wires();
    std::map<std::string, std::string> carrier;
    std::set<std::string> primary(r.outputs.begin(), r.outputs.end());
    GatePtr fg = builtin_gates().get("FG");
    for (const std::string &w : line_ends(r)) {
        if (r.mode == Mode::Quantum && primary.count(w)) {
            std::string anc = fresh_wire_name(taken, w + "_a");
            std::string po = fresh_wire_name(taken, w + "_o");
            std::string fb = fresh_wire_name(taken, w + "_f");
            c.add_const(anc, false);
            c.add_gate(fg, {w, anc}, {po, fb}, Region::Copy);
            std::replace(c.outputs.begin(), c.outputs.end(), w, po);
            carrier[w] = fb;
        } else {
            carrier[w] = w;
        }
    }

    for (size_t k = r.instances.size(); k-- > 0;) {
        const GateInstance &inst = r.instances[k];
        std::vector<std::string> in;
        for (const std::string &w : inst.out_wires) {
            in.push_back(carrier.at(w));
        }
        std::vector<std::string> out;
        for (const std::string &w : inst.in_wires) {
            out.push_back(fresh_wire_name(taken, w + "_r"));
        }
        c.add_gate(inverse_gate(inst.gate, registry, derive), in, out, Region::Rinv);
        for (size_t j = 0; j < out.size(); j++) {
            carrier[inst.in_wires[j]] = out[j];
        }
    }

    CedCircuit ced;
    ced.compare.scheme = Scheme::InverseCompare;
    for (const std::string &line : line_names(r)) {
        ced.compare.reference.push_back(line);
        ced.compare.check.push_back(carrier.count(line) ? carrier.at(line) : line);
    }
    ced.circuit = std::move(c);
    ced.base = r;
    ced.boundary_wires = r_boundary(ced.circuit);
    return ced;
}

CedCircuit build_duplicate_compare(const Circuit &r) {
    require_valid(r);

    Circuit c;
    c.name = r.name + "_dup";
    c.mode = r.mode;
    c.inputs = r.inputs;
    c.constants = r.constants;
    for (const GateInstance &inst : r.instances) {
        c.add_gate(inst.gate, inst.in_wires, inst.out_wires, Region::R);
    }
    c.outputs = r.outputs;

    std::vector<std::string> taken = r.wires();
    std::map<std::string, std::string> rename;
    for (const std::string &w : r.inputs) {
        rename[w] = w;
    }
    for (const auto &[w, v] : r.constants) {
        std::string dup = fresh_wire_name(taken, w + "_d");
        c.add_const(dup, v);
        rename[w] = dup;
    }
    for (const GateInstance &inst : r.instances) {
        std::vector<std::string> in;
        for (const std::string &w : inst.in_wires) {
            in.push_back(rename.at(w));
        }
        std::vector<std::string> out;
        for (const std::string &w : inst.out_wires) {
            rename[w] = fresh_wire_name(taken, w + "_d");
            out.push_back(rename[w]);
        }
        c.add_gate(inst.gate, in, out, Region::Rdup);
    }

    CedCircuit ced;
    ced.compare.scheme = Scheme::DuplicateCompare;
    for (const std::string &w : r.outputs) {
        ced.compare.check.push_back(rename.at(w));
    }
    ced.circuit = legalize_fanout(c);
    ced.compare.reference = ced.circuit.outputs;
    ced.base = r;
    ced.boundary_wires = r_boundary(ced.circuit);
    return ced;
}

CedCircuit ced_from_tagged(Circuit c, CompareSpec directive) {
    if (directive.reference.size() != directive.check.size() || directive.reference.empty()) {
        throw Error(ErrorCode::InvalidCircuit, "comparator of circuit " + c.name +
                                                   " needs two non-empty wire lists of equal length");
    }
    std::vector<std::string> wires = c.wires();
    for (const auto *list : {&directive.reference, &directive.check}) {
        for (const std::string &w : *list) {
            if (std::find(wires.begin(), wires.end(), w) == wires.end()) {
                throw Error(ErrorCode::InvalidCircuit, "comparator of circuit " + c.name + " reads unknown wire " + w);
            }
        }
    }
    CedCircuit ced;
    ced.boundary_wires = r_boundary(c);
    ced.circuit = std::move(c);
    ced.compare = std::move(directive);
    return ced;
}

Circuit invert_circuit(const Circuit &r, const GateRegistry *registry) {
    require_valid(r);
    require_no_internal_fanout(r);
    Circuit inv;
    inv.name = r.name + "_inv";
    inv.mode = r.mode;
    inv.inputs = line_ends(r);
    for (size_t k = r.instances.size(); k-- > 0;) {
        const GateInstance &inst = r.instances[k];
        inv.add_gate(derive_inverse(inst.gate, registry), inst.out_wires, inst.in_wires, inst.region);
    }
    inv.outputs = line_names(r);
    return inv;
}

RegenerationCheck check_regeneration(const CedCircuit &ced) {
    const Circuit &c = ced.circuit;
    if (c.inputs.size() > MAX_EXHAUSTIVE_WIDTH) {
        throw Error(ErrorCode::WidthCap, "regeneration check is capped at 20 inputs");
    }
    Evaluator ev(c);
    std::vector<size_t> ref = ev.wire_indices(ced.compare.reference);
    std::vector<size_t> chk = ev.wire_indices(ced.compare.check);
    RegenerationCheck result;
    result.total = size_t{1} << c.inputs.size();
    std::vector<uint8_t> values;
    for (uint64_t x = 0; x < result.total; x++) {
        ev.run(x, {}, values);
        bool agree = true;
        for (size_t k = 0; k < ref.size(); k++) {
            agree = agree && values[ref[k]] == values[chk[k]];
        }
        result.passing += agree;
    }
    return result;
}

}  // namespace revced
