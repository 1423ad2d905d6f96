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

#include "revced/evaluator.hpp"

#include "revced/error.hpp"

namespace revced {

Evaluator::Evaluator(const Circuit &c) : circuit_(c) {
    for (const Violation &v : validate(c)) {
        if (v.kind != Violation::Kind::FanOut && v.kind != Violation::Kind::GarbageNotSink) {
            throw Error(ErrorCode::InvalidCircuit, "circuit " + c.name + ": " + v.message);
        }
    }
    if (c.inputs.size() > 64) {
        throw Error(ErrorCode::WidthCap, "circuit " + c.name + " has more than 64 inputs");
    }
    names_ = c.wires();
    for (size_t k = 0; k < names_.size(); k++) {
        index_[names_[k]] = k;
    }
    for (const auto &[w, v] : c.constants) {
        constants_.emplace_back(index_.at(w), v);
    }
    for (const GateInstance &inst : c.instances) {
        steps_.push_back(Step{inst.gate.get(), wire_indices(inst.in_wires), wire_indices(inst.out_wires)});
    }
}

size_t Evaluator::wire_index(const std::string &wire) const {
    auto it = index_.find(wire);
    if (it == index_.end()) {
        throw Error(ErrorCode::InvalidCircuit, "circuit " + circuit_.name + " has no wire " + wire);
    }
    return it->second;
}

std::vector<size_t> Evaluator::wire_indices(std::span<const std::string> wires) const {
    std::vector<size_t> out;
    out.reserve(wires.size());
    for (const std::string &w : wires) {
        out.push_back(wire_index(w));
    }
    return out;
}

std::vector<Evaluator::Compiled> Evaluator::compile(std::span<const Fault> faults) const {
    std::vector<Compiled> out;
    for (const Fault &raw : faults) {
        Fault f = check_fault(circuit_, raw);
        Compiled cf{};
        cf.instance = fault_instance(circuit_, f);
        std::visit(
            [&](const auto &m) {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, BitFlip>) {
                    cf.kind = Compiled::Kind::Flip;
                } else if constexpr (std::is_same_v<M, StuckAt>) {
                    cf.kind = Compiled::Kind::Stuck;
                    cf.value = m.value;
                } else if constexpr (std::is_same_v<M, OutputMask>) {
                    cf.kind = Compiled::Kind::OutMask;
                    cf.mask = m.mask.value();
                } else if constexpr (std::is_same_v<M, InputMask>) {
                    cf.kind = Compiled::Kind::InMask;
                    cf.mask = m.mask.value();
                } else if constexpr (std::is_same_v<M, GateReplace>) {
                    cf.kind = Compiled::Kind::Replace;
                    // Points into the caller's fault list, which outlives the run.
                    cf.perm = &std::get<GateReplace>(raw.model).perm;
                } else {
                    cf.kind = Compiled::Kind::Mv;
                    cf.mv.node = std::get<MvNodeSite>(f.location).node;
                    if constexpr (std::is_same_v<M, MvInputBias>) {
                        cf.mv.kind = MvFault::Kind::InputBias;
                        cf.mv.operand = m.operand;
                        cf.mv.value = m.value;
                    } else if constexpr (std::is_same_v<M, MvStuckAt>) {
                        cf.mv.kind = MvFault::Kind::StuckAt;
                        cf.mv.value = m.value;
                    } else {
                        cf.mv.kind = MvFault::Kind::OutputInvert;
                    }
                }
            },
            f.model);
        if (auto *site = std::get_if<WireSite>(&f.location)) {
            cf.wire = wire_index(site->wire);
        }
        out.push_back(cf);
    }
    return out;
}

void Evaluator::run(uint64_t inputs, std::span<const Compiled> faults, std::vector<uint8_t> &values) const {
    values.assign(names_.size(), 0);
    for (size_t k = 0; k < circuit_.inputs.size(); k++) {
        values[k] = (inputs >> k) & 1;
    }
    for (const auto &[idx, v] : constants_) {
        values[idx] = v;
    }
    std::vector<MvFault> mv_faults;
    for (size_t k = 0; k < steps_.size(); k++) {
        const Step &step = steps_[k];
        uint32_t in = 0;
        for (size_t j = 0; j < step.in.size(); j++) {
            in |= uint32_t{values[step.in[j]]} << j;
        }
        const TruthPerm *perm = &step.gate->perm;
        mv_faults.clear();
        for (const Compiled &f : faults) {
            if (f.instance != k) {
                continue;
            }
            if (f.kind == Compiled::Kind::InMask) {
                in ^= f.mask;
            } else if (f.kind == Compiled::Kind::Replace) {
                perm = f.perm;
            } else if (f.kind == Compiled::Kind::Mv) {
                mv_faults.push_back(f.mv);
            }
        }
        uint32_t out;
        if (!mv_faults.empty()) {
            out = mv_eval(*step.gate->mv_network, BitWord(step.in.size(), in), mv_faults).value();
        } else {
            out = (*perm)(in);
        }
        for (const Compiled &f : faults) {
            if (f.instance == k && f.kind == Compiled::Kind::OutMask) {
                out ^= f.mask;
            }
        }
        for (size_t j = 0; j < step.out.size(); j++) {
            values[step.out[j]] = (out >> j) & 1;
        }
        for (const Compiled &f : faults) {
            if (f.instance != k) {
                continue;
            }
            if (f.kind == Compiled::Kind::Flip) {
                values[f.wire] ^= 1;
            } else if (f.kind == Compiled::Kind::Stuck) {
                values[f.wire] = f.value;
            }
        }
    }
}

std::vector<uint8_t> Evaluator::run(uint64_t inputs, std::span<const Compiled> faults) const {
    std::vector<uint8_t> values;
    run(inputs, faults, values);
    return values;
}

namespace {

WireTrace to_trace(const Evaluator &ev, const std::vector<uint8_t> &values) {
    WireTrace trace;
    for (size_t k = 0; k < values.size(); k++) {
        trace[ev.wire_names()[k]] = values[k];
    }
    return trace;
}

}  // namespace

WireTrace evaluate(const Circuit &c, const BitWord &x, const FaultSet &faults) {
    if (x.width() != c.inputs.size()) {
        throw Error(ErrorCode::MissingInput, "circuit " + c.name + " has " + std::to_string(c.inputs.size()) +
                                                 " inputs, got an assignment of width " + std::to_string(x.width()));
    }
    Evaluator ev(c);
    auto compiled = ev.compile(faults);
    return to_trace(ev, ev.run(x.value(), compiled));
}

WireTrace evaluate(const Circuit &c, const std::map<std::string, bool> &x, const FaultSet &faults) {
    Evaluator ev(c);
    uint64_t bits = 0;
    for (size_t k = 0; k < c.inputs.size(); k++) {
        auto it = x.find(c.inputs[k]);
        if (it == x.end()) {
            throw Error(ErrorCode::MissingInput, "no value for input " + c.inputs[k]);
        }
        bits |= uint64_t{it->second} << k;
    }
    auto compiled = ev.compile(faults);
    return to_trace(ev, ev.run(bits, compiled));
}

BitWord trace_word(const WireTrace &trace, std::span<const std::string> wires) {
    std::vector<bool> bits;
    for (const std::string &w : wires) {
        auto it = trace.find(w);
        if (it == trace.end()) {
            throw Error(ErrorCode::InvalidCircuit, "trace has no wire " + w);
        }
        bits.push_back(it->second);
    }
    return BitWord(bits);
}

}  // namespace revced
