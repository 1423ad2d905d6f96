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

#include "revced/campaign.hpp"

#include <algorithm>
#include <random>
#include <tuple>
#include <thread>

#include "revced/error.hpp"
#include "revced/evaluator.hpp"

namespace revced {

std::string_view model_class_name(ModelClass m) {
    switch (m) {
        case ModelClass::BitFlip:
            return "bitflip";
        case ModelClass::StuckAt:
            return "stuckat";
        case ModelClass::OutputMask:
            return "outputmask";
        case ModelClass::InputMask:
            return "inputmask";
        case ModelClass::GateReplace:
            return "replace";
        case ModelClass::MvInputBias:
            return "mvbias";
        case ModelClass::MvStuckAt:
            return "mvstuckat";
        case ModelClass::MvOutputInvert:
            return "mvinvert";
    }
    return "";
}

std::optional<std::vector<ModelClass>> parse_model_classes(std::string_view text) {
    if (text == "mv") {
        return std::vector<ModelClass>{ModelClass::MvInputBias, ModelClass::MvStuckAt, ModelClass::MvOutputInvert};
    }
    for (ModelClass m : {ModelClass::BitFlip, ModelClass::StuckAt, ModelClass::OutputMask, ModelClass::InputMask,
                         ModelClass::GateReplace, ModelClass::MvInputBias, ModelClass::MvStuckAt,
                         ModelClass::MvOutputInvert}) {
        if (text == model_class_name(m)) {
            return std::vector<ModelClass>{m};
        }
    }
    return std::nullopt;
}

std::vector<Fault> enumerate_faults(const CedCircuit &ced, const ModelSet &models, const RegionFilter &regions) {
    auto wants = [&](ModelClass m) {
        return models.classes.count(m) != 0;
    };
    std::vector<Fault> out;
    bool any_instance = false;
    for (const GateInstance &inst : ced.circuit.instances) {
        Region key = inst.region == Region::None ? Region::R : inst.region;
        if (!regions.count(key)) {
            continue;
        }
        any_instance = true;
        const GateDef &gate = *inst.gate;
        auto push = [&](FaultLocation loc, FaultModel model) {
            out.push_back(Fault{std::move(loc), std::move(model), inst.region});
        };

        for (const std::string &w : inst.out_wires) {
            if (wants(ModelClass::BitFlip)) {
                push(WireSite{w}, BitFlip{});
            }
            if (wants(ModelClass::StuckAt)) {
                push(WireSite{w}, StuckAt{false});
                push(WireSite{w}, StuckAt{true});
            }
        }

        uint32_t masks = uint32_t{1} << gate.width();
        if (wants(ModelClass::OutputMask)) {
            for (uint32_t e = 1; e < masks; e++) {
                push(InstanceSite{inst.id}, OutputMask{BitWord(gate.width(), e)});
            }
        }
        if (wants(ModelClass::InputMask)) {
            for (uint32_t e = 1; e < masks; e++) {
                push(InstanceSite{inst.id}, InputMask{BitWord(gate.width(), e)});
            }
        }
        if (wants(ModelClass::GateReplace)) {
            for (const TruthPerm &p : models.replacements) {
                if (p.width() == gate.width() && p != gate.perm) {
                    push(InstanceSite{inst.id}, GateReplace{p});
                }
            }
        }

        if (gate.mv_network) {
            for (size_t node = 0; node < gate.mv_network->nodes.size(); node++) {
                if (wants(ModelClass::MvInputBias)) {
                    for (size_t op = 0; op < 3; op++) {
                        push(MvNodeSite{inst.id, node}, MvInputBias{op, false});
                        push(MvNodeSite{inst.id, node}, MvInputBias{op, true});
                    }
                }
                if (wants(ModelClass::MvStuckAt)) {
                    push(MvNodeSite{inst.id, node}, MvStuckAt{false});
                    push(MvNodeSite{inst.id, node}, MvStuckAt{true});
                }
                if (wants(ModelClass::MvOutputInvert)) {
                    push(MvNodeSite{inst.id, node}, MvOutputInvert{});
                }
            }
        }
    }
    if (!any_instance) {
        throw Error(ErrorCode::EmptyRegion, "no instance of circuit " + ced.circuit.name + " lies in the fault region");
    }
    return out;
}

std::vector<FaultSet> singletons(const std::vector<Fault> &faults) {
    std::vector<FaultSet> out;
    out.reserve(faults.size());
    for (const Fault &f : faults) {
        out.push_back(FaultSet{f});
    }
    return out;
}

namespace {

/// Campaign state shared by all workers; read-only after construction.
struct Bench {
    const CedCircuit &ced;
    Evaluator ev;
    std::vector<size_t> outputs;
    std::vector<size_t> reference;
    std::vector<size_t> check;

    explicit Bench(const CedCircuit &c)
        : ced(c),
          ev(c.circuit),
          outputs(ev.wire_indices(c.circuit.outputs)),
          reference(ev.wire_indices(c.compare.reference)),
          check(ev.wire_indices(c.compare.check)) {
    }

    std::vector<bool> gather(const std::vector<uint8_t> &values, const std::vector<size_t> &idx) const {
        std::vector<bool> out(idx.size());
        for (size_t k = 0; k < idx.size(); k++) {
            out[k] = values[idx[k]];
        }
        return out;
    }

    bool flag(const std::vector<uint8_t> &values) const {
        for (size_t k = 0; k < reference.size(); k++) {
            if (values[reference[k]] != values[check[k]]) {
                return true;
            }
        }
        return false;
    }
};

std::string bits_str(const std::vector<bool> &bits) {
    std::string out;
    for (bool b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::string input_str(uint64_t x, size_t n) {
    std::string out;
    for (size_t k = 0; k < n; k++) {
        out.push_back(((x >> k) & 1) ? '1' : '0');
    }
    return out;
}

}  // namespace

SimResult simulate(const CedCircuit &ced, const FaultSet &faults, uint64_t input) {
    Bench bench(ced);
    auto compiled = bench.ev.compile(faults);
    std::vector<uint8_t> golden = bench.ev.run(input);
    std::vector<uint8_t> faulty = bench.ev.run(input, compiled);
    SimResult r;
    r.golden_out = bench.gather(golden, bench.outputs);
    r.faulty_out = bench.gather(faulty, bench.outputs);
    r.flag = bench.flag(faulty);
    r.corrupted = r.golden_out != r.faulty_out;
    return r;
}

double CampaignReport::coverage() const {
    return corrupting_cases == 0 ? 1.0 : (double)detected_cases / (double)corrupting_cases;
}

double CampaignReport::escape_rate() const {
    return corrupting_cases == 0 ? 0.0 : (double)silent_escapes / (double)corrupting_cases;
}

void CampaignReport::merge(const CampaignReport &other) {
    total_faults += other.total_faults;
    total_cases += other.total_cases;
    corrupting_cases += other.corrupting_cases;
    detected_cases += other.detected_cases;
    silent_escapes += other.silent_escapes;
    false_alarms += other.false_alarms;
    escape_list.insert(escape_list.end(), other.escape_list.begin(), other.escape_list.end());
    std::stable_sort(escape_list.begin(), escape_list.end(), [](const EscapeRecord &a, const EscapeRecord &b) {
        return std::tie(a.fault_id, a.input) < std::tie(b.fault_id, b.input);
    });
}

std::vector<uint64_t> campaign_inputs(const Circuit &c, const InputMode &mode) {
    size_t n = c.inputs.size();
    std::vector<uint64_t> out;
    if (mode.exhaustive) {
        if (n > MAX_EXHAUSTIVE_WIDTH) {
            throw Error(ErrorCode::WidthCap, "exhaustive campaign over " + std::to_string(n) +
                                                 " inputs exceeds the cap of " +
                                                 std::to_string(MAX_EXHAUSTIVE_WIDTH));
        }
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            out.push_back(x);
        }
        return out;
    }
    uint64_t mask = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::mt19937_64 rng(mode.seed);
    for (size_t k = 0; k < mode.count; k++) {
        out.push_back(rng() & mask);
    }
    return out;
}

CampaignReport campaign(const CedCircuit &ced, const std::vector<FaultSet> &faults, const InputMode &mode,
                        size_t threads) {
    Bench bench(ced);
    std::vector<uint64_t> inputs = campaign_inputs(ced.circuit, mode);
    size_t n_inputs = ced.circuit.inputs.size();

    std::vector<std::vector<bool>> golden;
    golden.reserve(inputs.size());
    for (uint64_t x : inputs) {
        golden.push_back(bench.gather(bench.ev.run(x), bench.outputs));
    }
    // Compile up front so invalid faults fail before any worker starts.
    std::vector<std::vector<Evaluator::Compiled>> compiled;
    compiled.reserve(faults.size());
    for (const FaultSet &fs : faults) {
        compiled.push_back(bench.ev.compile(fs));
    }

    auto run_range = [&](size_t begin, size_t end, CampaignReport &part) {
        std::vector<uint8_t> values;
        for (size_t f = begin; f < end; f++) {
            part.total_faults++;
            for (size_t k = 0; k < inputs.size(); k++) {
                bench.ev.run(inputs[k], compiled[f], values);
                part.total_cases++;
                bool flag = bench.flag(values);
                std::vector<bool> out = bench.gather(values, bench.outputs);
                bool corrupted = out != golden[k];
                if (corrupted) {
                    part.corrupting_cases++;
                    if (flag) {
                        part.detected_cases++;
                    } else {
                        part.silent_escapes++;
                        std::string description;
                        for (const Fault &fault : faults[f]) {
                            description += (description.empty() ? "" : "+") + fault.str();
                        }
                        part.escape_list.push_back(EscapeRecord{f, description, input_str(inputs[k], n_inputs),
                                                                bits_str(golden[k]), bits_str(out), flag});
                    }
                } else if (flag) {
                    part.false_alarms++;
                }
            }
        }
    };

    if (threads == 0) {
        threads = std::max<size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::max<size_t>(1, std::min(threads, faults.size()));
    std::vector<CampaignReport> parts(threads);
    if (threads == 1) {
        run_range(0, faults.size(), parts[0]);
    } else {
        std::vector<std::thread> workers;
        size_t chunk = (faults.size() + threads - 1) / threads;
        for (size_t t = 0; t < threads; t++) {
            size_t begin = std::min(faults.size(), t * chunk);
            size_t end = std::min(faults.size(), begin + chunk);
            workers.emplace_back(run_range, begin, end, std::ref(parts[t]));
        }
        for (std::thread &w : workers) {
            w.join();
        }
    }
    CampaignReport report;
    for (const CampaignReport &part : parts) {
        report.merge(part);
    }
    return report;
}

CampaignReport campaign(const CedCircuit &ced, const ModelSet &models, const RegionFilter &regions,
                        const InputMode &mode, size_t threads) {
    return campaign(ced, singletons(enumerate_faults(ced, models, regions)), mode, threads);
}

std::string_view pairing_name(Pairing p) {
    return p == Pairing::Replace ? "replace" : "boundary-mask";
}

std::optional<Pairing> parse_pairing(std::string_view text) {
    if (text == "replace") {
        return Pairing::Replace;
    }
    if (text == "boundary-mask") {
        return Pairing::BoundaryMask;
    }
    return std::nullopt;
}

std::vector<TruthPerm> sample_permutations(size_t width, size_t count, uint64_t seed, const TruthPerm *exclude) {
    std::mt19937_64 rng(seed);
    std::vector<TruthPerm> out;
    std::vector<uint32_t> table(size_t{1} << width);
    size_t attempts = 100 * count + 1000;
    while (out.size() < count && attempts-- > 0) {
        for (size_t k = 0; k < table.size(); k++) {
            table[k] = (uint32_t)k;
        }
        // Fisher-Yates on the raw engine output keeps the stream portable.
        for (size_t k = table.size() - 1; k > 0; k--) {
            std::swap(table[k], table[rng() % (k + 1)]);
        }
        TruthPerm p(width, table);
        if ((exclude && p == *exclude) || std::find(out.begin(), out.end(), p) != out.end()) {
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<size_t> ids_in_region(const Circuit &c, Region region) {
    std::vector<size_t> out;
    for (const GateInstance &inst : c.instances) {
        if (inst.region == region) {
            out.push_back(inst.id);
        }
    }
    return out;
}

}  // namespace

SchemeComparison scheme_compare(const Circuit &r, const PairingSpec &pairing, const GateRegistry *registry) {
    size_t k = r.instances.size();
    std::vector<size_t> positions = pairing.instances;
    if (positions.empty()) {
        for (size_t i = 0; i < k; i++) {
            positions.push_back(i);
        }
    }
    for (size_t i : positions) {
        if (i >= k) {
            throw Error(ErrorCode::BadPairing, "pairing references instance " + std::to_string(i) + " but " +
                                                   r.name + " has " + std::to_string(k));
        }
    }

    CedCircuit inv = build_inverse_compare(r, registry);
    CedCircuit dup = build_duplicate_compare(r);
    std::vector<size_t> inv_r = ids_in_region(inv.circuit, Region::R);
    std::vector<size_t> inv_mirror = ids_in_region(inv.circuit, Region::Rinv);
    std::vector<size_t> dup_r = ids_in_region(dup.circuit, Region::R);
    std::vector<size_t> dup_copy = ids_in_region(dup.circuit, Region::Rdup);

    SchemeComparison result;
    for (size_t i : positions) {
        const GateDef &gate = *r.instances[i].gate;
        size_t mirror = inv_mirror[k - 1 - i];
        const GateDef &mirror_gate = *inv.circuit.instances[mirror].gate;
        if (pairing.kind == Pairing::Replace) {
            for (const TruthPerm &p :
                 sample_permutations(gate.width(), pairing.replacement_count, pairing.seed + i, &gate.perm)) {
                result.dup_faults.push_back(
                    {Fault{InstanceSite{dup_r[i]}, GateReplace{p}}, Fault{InstanceSite{dup_copy[i]}, GateReplace{p}}});
                FaultSet inv_set{Fault{InstanceSite{inv_r[i]}, GateReplace{p}}};
                if (p != mirror_gate.perm) {
                    inv_set.push_back(Fault{InstanceSite{mirror}, GateReplace{p}});
                }
                result.inv_faults.push_back(std::move(inv_set));
            }
        } else {
            for (uint32_t e = 1; e < (uint32_t{1} << gate.width()); e++) {
                BitWord mask(gate.width(), e);
                result.dup_faults.push_back(
                    {Fault{InstanceSite{dup_r[i]}, OutputMask{mask}}, Fault{InstanceSite{dup_copy[i]}, OutputMask{mask}}});
                result.inv_faults.push_back(
                    {Fault{InstanceSite{inv_r[i]}, OutputMask{mask}}, Fault{InstanceSite{mirror}, InputMask{mask}}});
            }
        }
    }
    result.dup_report = campaign(dup, result.dup_faults, InputMode::all());
    result.inv_report = campaign(inv, result.inv_faults, InputMode::all());
    return result;
}

}  // namespace revced
