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

#include <functional>
#include <random>

#include "revced/error.hpp"
#include "revced/netlist.hpp"
#include "test_support.hpp"

using namespace revced;
using namespace revced::testing;

namespace {

ParseError parse_failure(const std::string &text) {
    try {
        parse_netlist(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return ParseError(ErrorCode::Syntax, 0, 0, "");
}

const char *BUNDLED[] = {"otg_full_adder.nl", "otg_adder_ced.nl", "qca1_ced.nl", "qca2_ced.nl"};

const std::string MAJORITY_GATE =
    "version 1\n"
    "\n"
    "defgate-mv MYQCA1 inputs=3 in=A,B,C cost=none inverse=none\n"
    "    out P = MV(A,B,C)\n"
    "    out Q = MV(A,B,~C)\n"
    "    out R = MV(~A,B,C)\n"
    "\n"
    "circuit uses_it mode=qca\n"
    "    input a b c\n"
    "    gate MYQCA1 a b c -> p q r\n"
    "    output p q r\n"
    "end\n";

}  // namespace

TEST(parse_netlist, inverse_compare_adder_file) {
    NetlistDocument doc = parse_netlist(read_file(netlist_path("otg_adder_ced.nl")));
    ASSERT_EQ(doc.circuits.size(), 1u);
    const CircuitBlock &b = doc.circuit("adder_ced");
    ASSERT_TRUE(validate(b.circuit).empty());
    Metrics m = metrics(b.circuit);
    ASSERT_EQ(m.gate_count, 4);
    ASSERT_EQ(m.garbage_count, 0);
    ASSERT_EQ(m.delay_levels, 3);
    ASSERT_EQ(m.quantum_cost, std::optional<int>(14));
    ASSERT_TRUE(b.compare.has_value());
    ASSERT_EQ(b.compare->scheme, Scheme::InverseCompare);
    ASSERT_EQ(b.compare->check, (std::vector<std::string>{"ra", "rb", "rz", "rcin"}));
    ASSERT_EQ(b.instance_pos[0].line, 11u);
    ASSERT_EQ(b.circuit.instances[0].region, Region::R);
    ASSERT_EQ(b.circuit.instances[1].region, Region::Copy);
    ASSERT_TRUE(check_regeneration(doc.ced("adder_ced")).ok());
    ASSERT_THROW(doc.circuit("missing"), Error);
}

TEST(parse_netlist, adder_computes_sum_and_carry) {
    Circuit c = parse_netlist(read_file(netlist_path("otg_full_adder.nl"))).circuit("otg_adder").circuit;
    for (uint32_t x = 0; x < 8; x++) {
        uint32_t total = (x & 1) + ((x >> 1) & 1) + ((x >> 2) & 1);
        std::vector<bool> out = oracle_outputs(c, x);
        ASSERT_EQ(out, (std::vector<bool>{(total & 1) != 0, (total & 2) != 0}));
    }
    ASSERT_EQ(metrics(c).garbage_count, 2);
}

TEST(parse_netlist, arity_error_names_gate_and_counts) {
    ParseError e = parse_failure(
        "version 1\n"
        "circuit c mode=quantum\n"
        "    input a b\n"
        "    gate OTG a b -> p q r s\n"
        "end\n");
    ASSERT_EQ(e.code(), ErrorCode::ArityMismatch);
    ASSERT_EQ(e.line(), 4u);
    ASSERT_NE(e.detail().find("OTG"), std::string::npos);
    ASSERT_NE(e.detail().find("expects 4 inputs"), std::string::npos);
}

TEST(parse_netlist, non_bijective_definition_is_rejected_at_its_line) {
    ParseError e = parse_failure(
        "version 1\n"
        "# a broken gate\n"
        "defgate BAD width=2 perm=[0,0,1,2]\n");
    ASSERT_EQ(e.code(), ErrorCode::NonBijective);
    ASSERT_EQ(e.line(), 3u);
    ASSERT_GE(e.column(), 1u);
}

TEST(parse_netlist, error_codes_and_positions) {
    struct Case {
        std::string text;
        ErrorCode code;
        size_t line;
        size_t column;
    };
    std::vector<Case> cases = {
        {"circuit c mode=quantum\nend\n", ErrorCode::Syntax, 1, 1},
        {"", ErrorCode::Syntax, 1, 1},
        {"version 2\n", ErrorCode::Syntax, 1, 9},
        {"version 1\ncircuit c mode=quantum\n    input a\n    gate NOPE a -> b\nend\n", ErrorCode::UnknownGate, 4, 10},
        {"version 1\ncircuit c mode=quantum\n    input a b\n    gate FG a b -> a q\nend\n", ErrorCode::DuplicateDriver,
         4, 20},
        {"version 1\ncircuit c mode=quantum\n    input a b\n    gate FG a b p q\nend\n", ErrorCode::Syntax, 4, 0},
        {"version 1\ncircuit c\nend\n", ErrorCode::Syntax, 2, 0},
        {"version 1\ncircuit c mode=quantum\n    input a\n", ErrorCode::Syntax, 0, 0},
        {"version 1\ndefgate QCA1 width=1 perm=[1,0]\n", ErrorCode::DuplicateName, 2, 0},
        {"version 1\ndefgate X width=1 perm=[1,0] inverse=NOPE\n", ErrorCode::BadInverseLink, 2, 0},
        {"version 1\nfrobnicate\n", ErrorCode::Syntax, 2, 1},
    };
    for (const Case &c : cases) {
        ParseError e = parse_failure(c.text);
        ASSERT_EQ(e.code(), c.code) << c.text << " -> " << e.what();
        if (c.line) {
            ASSERT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
        }
        if (c.column) {
            ASSERT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
        }
    }
}

TEST(parse_netlist, duplicate_driver_cites_the_first_driver) {
    ParseError e = parse_failure(
        "version 1\n"
        "circuit c mode=quantum\n"
        "    input a b c\n"
        "    gate FG a b -> p q\n"
        "    gate FG c c -> p r\n"
        "end\n");
    ASSERT_EQ(e.code(), ErrorCode::DuplicateDriver);
    ASSERT_EQ(e.line(), 5u);
    ASSERT_NE(e.detail().find("line 4"), std::string::npos) << e.detail();
}

TEST(parse_netlist, quantum_fanout_is_parsed_and_reported_by_validation) {
    NetlistDocument doc = parse_netlist(
        "version 1\n"
        "circuit c mode=quantum\n"
        "    input a b\n"
        "    gate FG a b -> p q\n"
        "    gate NOT p -> x\n"
        "    gate NOT p -> y\n"
        "    output q x y\n"
        "end\n");
    std::vector<Violation> v = validate(doc.circuit("c").circuit);
    ASSERT_EQ(v.size(), 1u);
    ASSERT_EQ(v[0].kind, Violation::Kind::FanOut);
}

TEST(parse_netlist, majority_gate_definition_matches_builtin) {
    NetlistDocument doc = parse_netlist(MAJORITY_GATE);
    ASSERT_EQ(doc.gate_defs.size(), 1u);
    const GateDef &mine = doc.gate_defs[0];
    ASSERT_EQ(mine.perm, builtin_gates().lookup("QCA1").perm);
    ASSERT_TRUE(mine.mv_network.has_value());
    ASSERT_EQ(mine.mv_network->nodes.size(), 3u);
    ASSERT_FALSE(mine.quantum_cost.has_value());
    for (uint32_t x = 0; x < 8; x++) {
        ASSERT_EQ(BitWord(oracle_outputs(doc.circuit("uses_it").circuit, x)).value(), oracle_qca(1, x));
    }
}

TEST(emit_netlist, canonical_text_is_a_fixed_point) {
    ASSERT_EQ(emit_netlist(parse_netlist("version 1\n")), "version 1\n");
    ASSERT_EQ(emit_netlist(parse_netlist(MAJORITY_GATE)), MAJORITY_GATE);
    for (const char *file : BUNDLED) {
        NetlistDocument doc = parse_netlist(read_file(netlist_path(file)));
        std::string text = emit_netlist(doc);
        NetlistDocument again = parse_netlist(text);
        ASSERT_EQ(again, doc) << file;
        ASSERT_EQ(emit_netlist(again), text) << file;
    }
}

TEST(emit_netlist, random_cascades_round_trip) {
    std::mt19937_64 rng(5);
    for (size_t serial = 0; serial < 100; serial++) {
        Circuit c = random_cascade(rng, 1 + serial % 5, serial % 6, serial);
        std::optional<CompareSpec> cmp;
        Circuit body = c;
        if (serial % 2) {
            CedCircuit ced = build_inverse_compare(c);
            body = ced.circuit;
            cmp = ced.compare;
        }
        NetlistDocument doc = single_circuit_document(body, cmp);
        std::string text = emit_netlist(doc);
        NetlistDocument again = parse_netlist(text);
        ASSERT_EQ(again, doc) << text;
        ASSERT_EQ(emit_netlist(again), text);
        const Circuit &back = again.circuits[0].circuit;
        for (uint32_t x = 0; x < (1u << body.inputs.size()); x++) {
            ASSERT_EQ(oracle_outputs(back, x), oracle_outputs(body, x));
        }
    }
}
