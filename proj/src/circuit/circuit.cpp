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

#include "revced/circuit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "revced/error.hpp"
#include "revced/evaluator.hpp"

namespace revced {

std::string_view mode_name(Mode mode) {
    return mode == Mode::Quantum ? "quantum" : "qca";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "quantum") {
        return Mode::Quantum;
    }
    if (text == "qca") {
        return Mode::Qca;
    }
    return std::nullopt;
}

std::string_view region_name(Region region) {
    switch (region) {
        case Region::None:
            return "";
        case Region::R:
            return "R";
        case Region::Rinv:
            return "Rinv";
        case Region::Rdup:
            return "Rdup";
        case Region::Copy:
            return "copy";
    }
    return "";
}

std::optional<Region> parse_region(std::string_view text) {
    for (Region r : {Region::R, Region::Rinv, Region::Rdup, Region::Copy}) {
        if (text == region_name(r)) {
            return r;
        }
    }
    return std::nullopt;
}

bool GateInstance::operator==(const GateInstance &other) const {
    bool same_gate = gate == other.gate || (gate && other.gate && *gate == *other.gate);
    return same_gate && in_wires == other.in_wires && out_wires == other.out_wires && id == other.id &&
           region == other.region;
}

Circuit &Circuit::add_input(std::string wire) {
    inputs.push_back(std::move(wire));
    return *this;
}

Circuit &Circuit::add_const(std::string wire, bool value) {
    constants.emplace_back(std::move(wire), value);
    return *this;
}

size_t Circuit::add_gate(GatePtr gate, std::vector<std::string> in, std::vector<std::string> out, Region region) {
    size_t id = instances.size();
    instances.push_back(GateInstance{std::move(gate), std::move(in), std::move(out), id, region});
    return id;
}

Circuit &Circuit::add_output(std::string wire) {
    outputs.push_back(std::move(wire));
    return *this;
}

std::vector<std::string> Circuit::wires() const {
    std::vector<std::string> out = inputs;
    for (const auto &[w, v] : constants) {
        out.push_back(w);
    }
    for (const GateInstance &inst : instances) {
        out.insert(out.end(), inst.out_wires.begin(), inst.out_wires.end());
    }
    return out;
}

std::vector<std::string> Circuit::sinks() const {
    std::set<std::string> read(outputs.begin(), outputs.end());
    for (const GateInstance &inst : instances) {
        read.insert(inst.in_wires.begin(), inst.in_wires.end());
    }
    std::vector<std::string> out;
    for (const std::string &w : wires()) {
        if (!read.count(w)) {
            out.push_back(w);
        }
    }
    return out;
}

bool Circuit::is_constant(const std::string &wire) const {
    return std::any_of(constants.begin(), constants.end(), [&](const auto &kv) {
        return kv.first == wire;
    });
}

std::string_view violation_kind_name(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::UndefinedWire:
            return "undefined-wire";
        case Violation::Kind::MultipleDrivers:
            return "multiple-drivers";
        case Violation::Kind::FanOut:
            return "fan-out";
        case Violation::Kind::UndrivenOutput:
            return "undriven-output";
        case Violation::Kind::ArityMismatch:
            return "arity-mismatch";
        case Violation::Kind::DuplicatePort:
            return "duplicate-port";
        case Violation::Kind::BadInstanceId:
            return "bad-instance-id";
        case Violation::Kind::UnknownGate:
            return "unknown-gate";
        case Violation::Kind::GarbageNotSink:
            return "garbage-not-sink";
    }
    return "unknown";
}

std::vector<Violation> validate(const Circuit &c) {
    using K = Violation::Kind;
    std::vector<Violation> out;
    std::set<std::string> defined;
    auto define = [&](const std::string &w, std::optional<size_t> inst) {
        if (!defined.insert(w).second) {
            out.push_back({K::MultipleDrivers, w, inst, "wire " + w + " has more than one driver"});
        }
    };
    for (const std::string &w : c.inputs) {
        define(w, std::nullopt);
    }
    for (const auto &[w, v] : c.constants) {
        define(w, std::nullopt);
    }

    std::map<std::string, int> readers;
    for (size_t k = 0; k < c.instances.size(); k++) {
        const GateInstance &inst = c.instances[k];
        std::string where = "instance " + std::to_string(k);
        if (inst.id != k) {
            out.push_back({K::BadInstanceId, "", k, where + " has id " + std::to_string(inst.id)});
        }
        if (!inst.gate) {
            out.push_back({K::UnknownGate, "", k, where + " has no gate"});
            continue;
        }
        size_t w = inst.gate->width();
        if (inst.in_wires.size() != w || inst.out_wires.size() != w) {
            out.push_back({K::ArityMismatch, "", k,
                           where + ": gate " + inst.gate->name + " expects " + std::to_string(w) + " inputs and " +
                               std::to_string(w) + " outputs, got " + std::to_string(inst.in_wires.size()) + " and " +
                               std::to_string(inst.out_wires.size())});
        }
        for (const auto *list : {&inst.in_wires, &inst.out_wires}) {
            std::set<std::string> seen;
            for (const std::string &wire : *list) {
                if (!seen.insert(wire).second) {
                    out.push_back({K::DuplicatePort, wire, k, where + " lists wire " + wire + " twice"});
                }
            }
        }
        for (const std::string &wire : inst.in_wires) {
            if (!defined.count(wire)) {
                out.push_back({K::UndefinedWire, wire, k, where + " reads wire " + wire + " before it is defined"});
            }
            readers[wire]++;
        }
        for (const std::string &wire : inst.out_wires) {
            define(wire, k);
        }
    }
    for (const std::string &wire : c.outputs) {
        if (!defined.count(wire)) {
            out.push_back({K::UndrivenOutput, wire, std::nullopt, "primary output " + wire + " is not driven"});
        }
        readers[wire]++;
    }
    if (c.mode == Mode::Quantum) {
        for (const std::string &wire : c.wires()) {
            auto it = readers.find(wire);
            if (it != readers.end() && it->second > 1) {
                out.push_back({K::FanOut, wire, std::nullopt,
                               "wire " + wire + " has " + std::to_string(it->second) +
                                   " readers; fan-out is not allowed in quantum mode"});
            }
        }
    }
    if (c.declared_garbage) {
        std::vector<std::string> sinks = c.sinks();
        for (const std::string &wire : *c.declared_garbage) {
            if (std::find(sinks.begin(), sinks.end(), wire) == sinks.end()) {
                out.push_back({K::GarbageNotSink, wire, std::nullopt,
                               "declared garbage wire " + wire + " is not an unused, non-primary output"});
            }
        }
    }
    return out;
}

std::vector<int> instance_levels(const Circuit &c) {
    std::map<std::string, size_t> producer;
    std::vector<int> levels(c.instances.size(), 0);
    for (size_t k = 0; k < c.instances.size(); k++) {
        int level = 1;
        for (const std::string &w : c.instances[k].in_wires) {
            auto it = producer.find(w);
            if (it != producer.end()) {
                level = std::max(level, levels[it->second] + 1);
            }
        }
        levels[k] = level;
        for (const std::string &w : c.instances[k].out_wires) {
            producer[w] = k;
        }
    }
    return levels;
}

Metrics metrics(const Circuit &c) {
    Metrics m;
    m.gate_count = (int)c.instances.size();
    std::vector<int> levels = instance_levels(c);
    m.delay_levels = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
    int cost = 0;
    bool known = true;
    for (const GateInstance &inst : c.instances) {
        if (inst.gate->quantum_cost) {
            cost += *inst.gate->quantum_cost;
        } else {
            known = false;
        }
    }
    if (known) {
        m.quantum_cost = cost;
    }
    for (const WireLabel &label : garbage_classify(c)) {
        if (label.role == WireRole::Garbage) {
            m.garbage_count++;
        }
    }
    return m;
}

std::string_view wire_role_name(WireRole role) {
    switch (role) {
        case WireRole::Primary:
            return "primary";
        case WireRole::RegeneratedInput:
            return "regenerated_input";
        case WireRole::RestoredConstant:
            return "restored_constant";
        case WireRole::Garbage:
            return "garbage";
    }
    return "";
}

namespace {

void check_exhaustive(const Circuit &c) {
    if (c.inputs.size() > MAX_EXHAUSTIVE_WIDTH) {
        throw Error(ErrorCode::WidthCap, "circuit " + c.name + " has " + std::to_string(c.inputs.size()) +
                                             " inputs; exhaustive analysis is capped at " +
                                             std::to_string(MAX_EXHAUSTIVE_WIDTH));
    }
}

bool try_augment(size_t input, const std::vector<std::vector<size_t>> &candidates, std::vector<bool> &visited,
                 std::vector<long> &owner) {
    for (size_t sink : candidates[input]) {
        if (visited[sink]) {
            continue;
        }
        visited[sink] = true;
        if (owner[sink] < 0 || try_augment((size_t)owner[sink], candidates, visited, owner)) {
            owner[sink] = (long)input;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<WireLabel> garbage_classify(const Circuit &c) {
    check_exhaustive(c);
    Evaluator ev(c);
    std::vector<std::string> sinks = c.sinks();
    std::vector<size_t> sink_idx = ev.wire_indices(sinks);
    size_t n = c.inputs.size();

    // equals[s][i]: sink s equals input i on every assignment.
    std::vector<std::vector<bool>> equals(sinks.size(), std::vector<bool>(n, true));
    std::vector<bool> always0(sinks.size(), true);
    std::vector<bool> always1(sinks.size(), true);
    std::vector<uint8_t> values;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        ev.run(x, {}, values);
        for (size_t s = 0; s < sinks.size(); s++) {
            bool v = values[sink_idx[s]];
            always0[s] = always0[s] && !v;
            always1[s] = always1[s] && v;
            for (size_t i = 0; i < n; i++) {
                if (equals[s][i] && v != (bool)((x >> i) & 1)) {
                    equals[s][i] = false;
                }
            }
        }
    }

    std::vector<std::vector<size_t>> candidates(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t s = 0; s < sinks.size(); s++) {
            if (equals[s][i]) {
                candidates[i].push_back(s);
            }
        }
    }
    std::vector<long> owner(sinks.size(), -1);
    bool complete = true;
    for (size_t i = 0; i < n; i++) {
        std::vector<bool> visited(sinks.size(), false);
        if (!try_augment(i, candidates, visited, owner)) {
            complete = false;
            break;
        }
    }

    std::vector<WireLabel> labels;
    for (const std::string &w : c.outputs) {
        labels.push_back({w, WireRole::Primary, ""});
    }
    std::vector<bool> restored(sinks.size(), false);
    std::vector<std::string> restored_source(sinks.size());
    if (complete) {
        for (const auto &[cw, cv] : c.constants) {
            for (size_t s = 0; s < sinks.size(); s++) {
                if (owner[s] < 0 && !restored[s] && (cv ? always1[s] : always0[s])) {
                    restored[s] = true;
                    restored_source[s] = cw;
                    break;
                }
            }
        }
    }
    for (size_t s = 0; s < sinks.size(); s++) {
        if (complete && owner[s] >= 0) {
            labels.push_back({sinks[s], WireRole::RegeneratedInput, c.inputs[(size_t)owner[s]]});
        } else if (restored[s]) {
            labels.push_back({sinks[s], WireRole::RestoredConstant, restored_source[s]});
        } else {
            labels.push_back({sinks[s], WireRole::Garbage, ""});
        }
    }
    return labels;
}

std::string TruthTable::row_str(size_t row) const {
    std::string out;
    for (size_t k = 0; k < output_wires.size(); k++) {
        out.push_back(at(row, k) ? '1' : '0');
    }
    return out;
}

TruthTable truth_function(const Circuit &c) {
    check_exhaustive(c);
    Evaluator ev(c);
    TruthTable t;
    t.input_wires = c.inputs;
    t.output_wires = c.outputs;
    t.primary_count = c.outputs.size();
    for (const std::string &w : c.sinks()) {
        t.output_wires.push_back(w);
    }
    std::vector<size_t> idx = ev.wire_indices(t.output_wires);
    t.rows = size_t{1} << c.inputs.size();
    t.cells.resize(t.rows * idx.size());
    std::vector<uint8_t> values;
    for (size_t x = 0; x < t.rows; x++) {
        ev.run(x, {}, values);
        for (size_t k = 0; k < idx.size(); k++) {
            t.cells[x * idx.size() + k] = values[idx[k]];
        }
    }
    return t;
}

std::string fresh_wire_name(std::vector<std::string> &taken, const std::string &base) {
    for (size_t k = 1;; k++) {
        std::string candidate = base + std::to_string(k);
        if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) {
            taken.push_back(candidate);
            return candidate;
        }
    }
}

Circuit legalize_fanout(const Circuit &c) {
    if (c.mode != Mode::Quantum) {
        return c;
    }
    GatePtr fg = builtin_gates().get("FG");

    // Reader slots per wire: (instance, port) for gates, (npos, slot) for outputs.
    constexpr size_t OUTPUT_SLOT = static_cast<size_t>(-1);
    std::map<std::string, std::vector<std::pair<size_t, size_t>>> readers;
    for (size_t k = 0; k < c.instances.size(); k++) {
        for (size_t j = 0; j < c.instances[k].in_wires.size(); j++) {
            readers[c.instances[k].in_wires[j]].emplace_back(k, j);
        }
    }
    for (size_t m = 0; m < c.outputs.size(); m++) {
        readers[c.outputs[m]].emplace_back(OUTPUT_SLOT, m);
    }

    Circuit out = c;
    out.instances.clear();
    std::vector<std::string> taken = c.wires();
    std::vector<GateInstance> pending = c.instances;

    auto split = [&](const std::string &wire) {
        auto it = readers.find(wire);
        if (it == readers.end() || it->second.size() < 2) {
            return;
        }
        const auto &slots = it->second;
        std::deque<std::string> copies{wire};
        while (copies.size() < slots.size()) {
            std::string src = copies.front();
            copies.pop_front();
            std::string anc = fresh_wire_name(taken, wire + "_a");
            out.add_const(anc, false);
            std::string p = fresh_wire_name(taken, wire + "_f");
            std::string q = fresh_wire_name(taken, wire + "_f");
            out.add_gate(fg, {src, anc}, {p, q}, Region::Copy);
            copies.push_back(p);
            copies.push_back(q);
        }
        for (size_t r = 0; r < slots.size(); r++) {
            auto [inst, port] = slots[r];
            if (inst == OUTPUT_SLOT) {
                out.outputs[port] = copies[r];
            } else {
                pending[inst].in_wires[port] = copies[r];
            }
        }
    };

    for (const std::string &w : c.inputs) {
        split(w);
    }
    for (const auto &[w, v] : c.constants) {
        split(w);
    }
    for (size_t k = 0; k < c.instances.size(); k++) {
        const GateInstance &inst = pending[k];
        out.add_gate(inst.gate, inst.in_wires, inst.out_wires, inst.region);
        for (const std::string &w : c.instances[k].out_wires) {
            split(w);
        }
    }
    return out;
}

}  // namespace revced
