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

#include <gtest/gtest.h>

#include <random>

#include "revced/campaign.hpp"
#include "revced/ced.hpp"
#include "revced/error.hpp"
#include "revced/evaluator.hpp"
#include "revced/netlist.hpp"
#include "test_support.hpp"

using namespace revced;
using namespace revced::testing;

namespace {

Circuit load_circuit(const std::string &file, const std::string &name) {
    return parse_netlist(read_file(netlist_path(file))).circuit(name).circuit;
}

GatePtr gate(const std::string &name) {
    return builtin_gates().get(name);
}

std::vector<std::pair<std::string, Region>> shape(const Circuit &c) {
    std::vector<std::pair<std::string, Region>> out;
    for (const GateInstance &inst : c.instances) {
        out.emplace_back(inst.gate->name, inst.region);
    }
    return out;
}

Circuit free_otg() {
    Circuit r;
    r.name = "otg4";
    r.add_input("a").add_input("b").add_input("c").add_input("d");
    r.add_gate(gate("OTG"), {"a", "b", "c", "d"}, {"p", "q", "r", "s"});
    r.add_output("r").add_output("s");
    return r;
}

Circuit qca1_alone() {
    Circuit r;
    r.name = "qca1";
    r.mode = Mode::Qca;
    r.add_input("a").add_input("b").add_input("c");
    r.add_gate(gate("QCA1"), {"a", "b", "c"}, {"p", "q", "r"});
    r.add_output("p").add_output("q").add_output("r");
    return r;
}

}  // namespace

TEST(compare, bitwise_verdicts) {
    ComparatorVerdict same = compare(BitWord::from_string("1010"), BitWord::from_string("1010"));
    ASSERT_FALSE(same.flag);
    ASSERT_TRUE(same.mismatch_positions.empty());
    // Integer 0b1001 against 0b1000: only the least significant wire differs.
    ComparatorVerdict one = compare(BitWord(4, 0b1001), BitWord(4, 0b1000));
    ASSERT_TRUE(one.flag);
    ASSERT_EQ(one.mismatch_positions, (std::vector<size_t>{0}));
    ComparatorVerdict all = compare(BitWord::from_string("1001"), BitWord::from_string("0110"));
    ASSERT_EQ(all.mismatch_positions, (std::vector<size_t>{0, 1, 2, 3}));
    ASSERT_THROW(compare(BitWord(3, 0), BitWord(4, 0)), Error);
}

TEST(build_inverse_compare, otg_adder_becomes_the_four_gate_wrapper) {
    CedCircuit ced = build_inverse_compare(load_circuit("otg_full_adder.nl", "otg_adder"));
    std::vector<std::pair<std::string, Region>> expected = {
        {"OTG", Region::R}, {"FG", Region::Copy}, {"FG", Region::Copy}, {"IOTG", Region::Rinv}};
    ASSERT_EQ(shape(ced.circuit), expected);
    ASSERT_EQ(shape(ced.circuit), shape(load_circuit("otg_adder_ced.nl", "adder_ced")));
    Metrics m = metrics(ced.circuit);
    ASSERT_EQ(m.gate_count, 4);
    ASSERT_EQ(m.garbage_count, 0);
    ASSERT_EQ(m.delay_levels, 3);
    ASSERT_TRUE(check_regeneration(ced).ok());
    ASSERT_EQ(ced.original_inputs().size(), ced.regenerated_wires().size());
    ASSERT_EQ(ced.original_inputs(), (std::vector<std::string>{"a", "b", "cin", "z"}));
    ASSERT_EQ(ced.boundary_wires, (std::vector<std::string>{"p", "q", "sum", "cout"}));
}

TEST(build_inverse_compare, single_feynman_gate) {
    Circuit r;
    r.add_input("a").add_input("b");
    r.add_gate(gate("FG"), {"a", "b"}, {"p", "q"});
    r.add_output("q");
    CedCircuit ced = build_inverse_compare(r);
    std::vector<std::pair<std::string, Region>> expected = {
        {"FG", Region::R}, {"FG", Region::Copy}, {"FG", Region::Rinv}};
    ASSERT_EQ(shape(ced.circuit), expected);
    // P is garbage of R and feeds the inverse directly.
    ASSERT_EQ(ced.circuit.instances[2].in_wires[0], "p");
    RegenerationCheck regen = check_regeneration(ced);
    ASSERT_EQ(regen.passing, 4u);
    ASSERT_EQ(regen.total, 4u);
    ASSERT_EQ(metrics(ced.circuit).garbage_count, 0);
}

TEST(build_inverse_compare, qca_cascade_needs_no_copies) {
    CedCircuit ced = build_inverse_compare(qca1_alone());
    std::vector<std::pair<std::string, Region>> expected = {{"QCA1", Region::R}, {"IQCA1", Region::Rinv}};
    ASSERT_EQ(shape(ced.circuit), expected);
    RegenerationCheck regen = check_regeneration(ced);
    ASSERT_EQ(regen.passing, 8u);
    ASSERT_EQ(regen.total, 8u);
}

TEST(build_inverse_compare, missing_inverse_without_derivation) {
    auto odd = std::make_shared<const GateDef>(GateDef{"ODD", TruthPerm(2, {1, 2, 3, 0}), 2, {}, {}});
    Circuit r;
    r.add_input("a").add_input("b");
    r.add_gate(odd, {"a", "b"}, {"p", "q"});
    r.add_output("p").add_output("q");
    try {
        build_inverse_compare(r, nullptr, false);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::NoInverse);
    }
    CedCircuit derived = build_inverse_compare(r);
    ASSERT_EQ(derived.circuit.instances.back().gate->name, "ODD_INV");
    ASSERT_TRUE(check_regeneration(derived).ok());
}

TEST(build_inverse_compare, rejects_internal_fanout) {
    Circuit r;
    r.add_input("a").add_input("b").add_input("c");
    r.add_gate(gate("FG"), {"a", "b"}, {"p", "q"});
    r.add_gate(gate("FG"), {"p", "c"}, {"r", "s"});
    r.add_gate(gate("NOT"), {"p"}, {"t"});
    r.mode = Mode::Qca;
    r.add_output("s");
    ASSERT_THROW(build_inverse_compare(r), Error);
}

TEST(build_duplicate_compare, identical_copies_agree_and_detect_single_copy_faults) {
    Circuit r = load_circuit("otg_full_adder.nl", "otg_adder");
    CedCircuit dup = build_duplicate_compare(r);
    size_t otg_count = 0;
    for (const GateInstance &inst : dup.circuit.instances) {
        otg_count += inst.gate->name == "OTG";
    }
    ASSERT_EQ(otg_count, 2u);
    ASSERT_TRUE(validate(dup.circuit).empty());
    ASSERT_TRUE(check_regeneration(dup).ok());

    // A flip on copy 1's sum line changes a compared bit on every input.
    const GateInstance *copy1 = nullptr;
    for (const GateInstance &inst : dup.circuit.instances) {
        if (inst.region == Region::R) {
            copy1 = &inst;
        }
    }
    ASSERT_NE(copy1, nullptr);
    Fault flip{WireSite{copy1->out_wires[2]}, BitFlip{}};
    for (uint64_t x = 0; x < 8; x++) {
        SimResult s = simulate(dup, {flip}, x);
        ASSERT_TRUE(s.flag);
        ASSERT_TRUE(s.corrupted);
    }
    Fault garbage_flip{WireSite{copy1->out_wires[0]}, BitFlip{}};
    for (uint64_t x = 0; x < 8; x++) {
        ASSERT_FALSE(simulate(dup, {garbage_flip}, x).flag);
    }
}

TEST(build_duplicate_compare, identical_replacement_in_both_copies_is_never_flagged) {
    CedCircuit dup = build_duplicate_compare(load_circuit("otg_full_adder.nl", "otg_adder"));
    std::vector<size_t> otg;
    for (const GateInstance &inst : dup.circuit.instances) {
        if (inst.gate->name == "OTG") {
            otg.push_back(inst.id);
        }
    }
    TruthPerm wrong = builtin_gates().lookup("IOTG").perm;
    FaultSet both = {Fault{InstanceSite{otg[0]}, GateReplace{wrong}}, Fault{InstanceSite{otg[1]}, GateReplace{wrong}}};
    size_t corrupted = 0;
    for (uint64_t x = 0; x < 8; x++) {
        SimResult s = simulate(dup, both, x);
        ASSERT_FALSE(s.flag);
        corrupted += s.corrupted;
    }
    ASSERT_GT(corrupted, 0u);
}

TEST(boundary_detection, every_nonzero_boundary_mask_is_flagged) {
    for (const Circuit &r : {free_otg(), qca1_alone()}) {
        CedCircuit ced = build_inverse_compare(r);
        size_t width = r.instances[0].gate->width();
        size_t cases = 0;
        for (uint32_t e = 1; e < (1u << width); e++) {
            Fault f{InstanceSite{0}, OutputMask{BitWord(width, e)}};
            for (uint64_t x = 0; x < (uint64_t{1} << r.inputs.size()); x++) {
                ASSERT_TRUE(simulate(ced, {f}, x).flag);
                cases++;
            }
        }
        ASSERT_EQ(cases, width == 4 ? 240u : 56u);
    }
}

TEST(copy_gate, feynman_with_zero_ancilla_copies) {
    for (uint32_t a = 0; a < 2; a++) {
        BitWord out = gate_eval(*gate("FG"), BitWord(2, a));
        ASSERT_EQ(out[0], (bool)a);
        ASSERT_EQ(out[1], (bool)a);
    }
}

TEST(garbageless, random_cascade_corpus) {
    std::mt19937_64 rng(2024);
    size_t built = 0;
    for (size_t serial = 0; serial < 120; serial++) {
        size_t width = 2 + serial % 3;
        size_t length = 1 + (serial / 3) % 5;
        Circuit r = random_cascade(rng, width, length, serial);
        CedCircuit ced = build_inverse_compare(r);
        ASSERT_TRUE(validate(ced.circuit).empty()) << serial;
        ASSERT_TRUE(check_regeneration(ced).ok()) << serial;
        for (const WireLabel &l : garbage_classify(ced.circuit)) {
            ASSERT_NE(l.role, WireRole::Garbage) << serial << " " << l.wire;
        }
        built++;
    }
    ASSERT_GE(built, 100u);
}

TEST(invert_circuit, computes_the_inverse_function) {
    Circuit r = free_otg();
    r.outputs = {"p", "q", "r", "s"};
    Circuit inv = invert_circuit(r);
    ASSERT_EQ(inv.inputs, (std::vector<std::string>{"p", "q", "r", "s"}));
    ASSERT_EQ(inv.instances[0].gate->name, "IOTG");
    for (uint32_t y = 0; y < 16; y++) {
        std::vector<bool> out = oracle_outputs(inv, y);
        ASSERT_EQ(BitWord(out).value(), builtin_gates().lookup("IOTG").perm(y));
    }
}

TEST(ced_from_tagged, checks_comparator_wires) {
    Circuit c = load_circuit("qca1_ced.nl", "qca1_ced");
    ASSERT_THROW(ced_from_tagged(c, CompareSpec{Scheme::InverseCompare, {"a"}, {"nope"}}), Error);
    ASSERT_THROW(ced_from_tagged(c, CompareSpec{Scheme::InverseCompare, {"a", "b"}, {"ra"}}), Error);
    CedCircuit ok = ced_from_tagged(c, CompareSpec{Scheme::InverseCompare, {"a", "b", "c"}, {"ra", "rb", "rc"}});
    ASSERT_EQ(ok.boundary_wires, (std::vector<std::string>{"p", "q", "r"}));
}
