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

#ifndef REVCED_TESTS_TEST_SUPPORT_HPP
#define REVCED_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "revced/circuit.hpp"
#include "revced/gate.hpp"

namespace revced::testing {

using Rows = std::vector<std::pair<std::string, std::string>>;

// Published truth tables, wires in column order (leftmost character = first wire).
inline const Rows OTG_ROWS = {
    {"0000", "0000"}, {"0001", "0010"}, {"0010", "0001"}, {"0011", "0011"}, {"0100", "0110"}, {"0101", "0101"},
    {"0110", "0111"}, {"0111", "0100"}, {"1000", "1110"}, {"1001", "1101"}, {"1010", "1111"}, {"1011", "1100"},
    {"1100", "1001"}, {"1101", "1011"}, {"1110", "1000"}, {"1111", "1010"},
};
inline const Rows IOTG_ROWS = {
    {"0000", "0000"}, {"0001", "0010"}, {"0010", "0001"}, {"0011", "0011"}, {"0100", "0111"}, {"0101", "0101"},
    {"0110", "0100"}, {"0111", "0110"}, {"1000", "1110"}, {"1001", "1100"}, {"1010", "1111"}, {"1011", "1101"},
    {"1100", "1011"}, {"1101", "1001"}, {"1110", "1000"}, {"1111", "1010"},
};
inline const Rows QCA1_ROWS = {
    {"000", "000"}, {"001", "001"}, {"010", "011"}, {"011", "101"},
    {"100", "010"}, {"101", "100"}, {"110", "110"}, {"111", "111"},
};
inline const Rows IQCA1_ROWS = {
    {"000", "000"}, {"001", "001"}, {"010", "100"}, {"011", "010"},
    {"100", "101"}, {"101", "011"}, {"110", "110"}, {"111", "111"},
};

inline std::string netlist_path(const std::string &name) {
    return std::string(REVCED_NETLIST_DIR) + "/" + name;
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Wire-order string of the low `n` bits of `x`.
inline std::string bits(uint32_t x, size_t n) {
    std::string out;
    for (size_t k = 0; k < n; k++) {
        out.push_back(((x >> k) & 1) ? '1' : '0');
    }
    return out;
}

inline bool oracle_majority(bool a, bool b, bool c) {
    return (int)a + (int)b + (int)c >= 2;
}

/// Majority-logic gate equations written out directly, one bit at a time.
inline uint32_t oracle_qca(int variant, uint32_t x) {
    bool a = x & 1, b = (x >> 1) & 1, c = (x >> 2) & 1;
    bool p = oracle_majority(a, b, c);
    bool q = oracle_majority(a, b, !c);
    bool r = variant == 1 ? oracle_majority(!a, b, c) : oracle_majority(!a, b, !c);
    return (uint32_t)p | ((uint32_t)q << 1) | ((uint32_t)r << 2);
}

inline uint32_t oracle_iqca(int variant, uint32_t x) {
    bool p = x & 1, q = (x >> 1) & 1, r = (x >> 2) & 1;
    bool a = oracle_majority(p, q, !r);
    bool b = oracle_majority(p, q, r);
    bool c = variant == 1 ? oracle_majority(p, !q, r) : oracle_majority(p, !q, !r);
    return (uint32_t)a | ((uint32_t)b << 1) | ((uint32_t)c << 2);
}

/// ANF coefficients by the subset-sum definition: coefficient of monomial m is
/// the XOR of truth[x] over all x whose variables are a subset of m.
inline std::set<uint32_t> oracle_anf(const std::vector<bool> &truth) {
    std::set<uint32_t> out;
    for (uint32_t m = 0; m < truth.size(); m++) {
        bool coefficient = false;
        for (uint32_t x = 0; x < truth.size(); x++) {
            if ((x & m) == x) {
                coefficient ^= truth[x];
            }
        }
        if (coefficient) {
            out.insert(m);
        }
    }
    return out;
}

/// Straightforward map-based interpreter, independent of the library evaluator.
/// Returns every wire's value.
inline std::map<std::string, bool> oracle_run(const Circuit &c, uint64_t x) {
    std::map<std::string, bool> v;
    for (size_t k = 0; k < c.inputs.size(); k++) {
        v[c.inputs[k]] = (x >> k) & 1;
    }
    for (const auto &[w, value] : c.constants) {
        v[w] = value;
    }
    for (const GateInstance &inst : c.instances) {
        uint32_t in = 0;
        for (size_t k = 0; k < inst.in_wires.size(); k++) {
            in |= (uint32_t)v.at(inst.in_wires[k]) << k;
        }
        uint32_t out = inst.gate->perm.table()[in];
        for (size_t k = 0; k < inst.out_wires.size(); k++) {
            v[inst.out_wires[k]] = (out >> k) & 1;
        }
    }
    return v;
}

inline std::vector<bool> oracle_outputs(const Circuit &c, uint64_t x) {
    auto v = oracle_run(c, x);
    std::vector<bool> out;
    for (const std::string &w : c.outputs) {
        out.push_back(v.at(w));
    }
    return out;
}

inline GatePtr random_gate(std::mt19937_64 &rng, size_t width, const std::string &name) {
    std::vector<uint32_t> table(size_t{1} << width);
    for (size_t k = 0; k < table.size(); k++) {
        table[k] = (uint32_t)k;
    }
    std::shuffle(table.begin(), table.end(), rng);
    GateDef def;
    def.name = name;
    def.perm = TruthPerm(width, table);
    return std::make_shared<const GateDef>(std::move(def));
}

/// Random fan-out-free cascade over `width` lines: a mix of built-in gates
/// and random bijections, some lines possibly held constant, a random
/// non-empty subset of line ends as primary outputs.
inline Circuit random_cascade(std::mt19937_64 &rng, size_t width, size_t length, size_t serial = 0) {
    Circuit c;
    c.name = "cascade" + std::to_string(serial);
    std::vector<std::string> carrier;
    for (size_t k = 0; k < width; k++) {
        std::string w = "l" + std::to_string(k);
        if (k > 0 && rng() % 4 == 0) {
            c.add_const(w, rng() % 2);
        } else {
            c.add_input(w);
        }
        carrier.push_back(w);
    }
    std::vector<GatePtr> pool;
    for (const GatePtr &g : builtin_gates().gates()) {
        if (g->width() <= width) {
            pool.push_back(g);
        }
    }
    for (size_t i = 0; i < length; i++) {
        GatePtr g;
        if (rng() % 3 == 0) {
            size_t w = 1 + rng() % width;
            g = random_gate(rng, w, "RND" + std::to_string(serial) + "_" + std::to_string(i));
        } else {
            g = pool[rng() % pool.size()];
        }
        std::vector<size_t> lines(width);
        for (size_t k = 0; k < width; k++) {
            lines[k] = k;
        }
        std::shuffle(lines.begin(), lines.end(), rng);
        std::vector<std::string> in;
        std::vector<std::string> out;
        for (size_t k = 0; k < g->width(); k++) {
            in.push_back(carrier[lines[k]]);
            std::string fresh = "g" + std::to_string(i) + "_" + std::to_string(k);
            out.push_back(fresh);
            carrier[lines[k]] = fresh;
        }
        c.add_gate(g, in, out);
    }
    for (const std::string &w : carrier) {
        if (rng() % 2 == 0) {
            c.add_output(w);
        }
    }
    if (c.outputs.empty()) {
        c.add_output(carrier.back());
    }
    return c;
}

/// Random quantum-mode circuit whose wires may be read many times (fan-out),
/// built from small built-in gates over `inputs` primary inputs.
inline Circuit random_fanout_circuit(std::mt19937_64 &rng, size_t inputs, size_t gates) {
    Circuit c;
    c.name = "fan";
    std::vector<std::string> pool;
    for (size_t k = 0; k < inputs; k++) {
        c.add_input("x" + std::to_string(k));
        pool.push_back("x" + std::to_string(k));
    }
    if (rng() % 2) {
        c.add_const("k", true);
        pool.push_back("k");
    }
    const GateRegistry &reg = builtin_gates();
    std::vector<GatePtr> lib = {reg.get("NOT"), reg.get("FG"), reg.get("TOF"), reg.get("FRE"), reg.get("OTG")};
    for (size_t i = 0; i < gates; i++) {
        GatePtr g = lib[rng() % lib.size()];
        if (g->width() > pool.size()) {
            continue;
        }
        std::vector<std::string> shuffled = pool;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<std::string> in(shuffled.begin(), shuffled.begin() + (long)g->width());
        std::vector<std::string> out;
        for (size_t k = 0; k < g->width(); k++) {
            out.push_back("n" + std::to_string(i) + "_" + std::to_string(k));
            pool.push_back(out.back());
        }
        c.add_gate(g, in, out);
    }
    for (size_t k = 0; k < 4; k++) {
        c.add_output(pool[rng() % pool.size()]);
    }
    return c;
}

}  // namespace revced::testing

#endif
