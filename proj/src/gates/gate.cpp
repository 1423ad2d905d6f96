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

#include "revced/gate.hpp"

#include <algorithm>
#include <set>

#include "revced/anf.hpp"
#include "revced/error.hpp"

namespace revced {

BitWord gate_eval(const GateDef &g, const BitWord &x) {
    if (x.width() != g.width()) {
        throw Error(ErrorCode::WidthMismatch, "gate " + g.name + " has width " + std::to_string(g.width()) +
                                                  ", got input of width " + std::to_string(x.width()));
    }
    return g.perm.apply(x);
}

GatePtr GateRegistry::add(GateDef def) {
    if (by_name_.count(def.name)) {
        throw Error(ErrorCode::DuplicateName, "gate " + def.name + " is already registered");
    }
    if (def.quantum_cost && *def.quantum_cost < 0) {
        throw Error(ErrorCode::InvalidCircuit, "gate " + def.name + " has a negative quantum cost");
    }
    if (def.mv_network) {
        const MvNetwork &net = *def.mv_network;
        net.check();
        if (net.inputs != def.width() || net.outputs.size() != def.width()) {
            throw Error(ErrorCode::MvMismatch, "majority network of " + def.name + " has the wrong width");
        }
        for (uint32_t x = 0; x < def.perm.size(); x++) {
            BitWord in(def.width(), x);
            BitWord want = def.perm.apply(in);
            BitWord got = mv_eval(net, in);
            if (got != want) {
                throw Error(ErrorCode::MvMismatch, "majority network of " + def.name + " maps " + in.str() + " to " +
                                                       got.str() + " but the permutation gives " + want.str());
            }
        }
    }

    TruthPerm inverse = perm_invert(def.perm);
    if (def.inverse_name) {
        const std::string &target = *def.inverse_name;
        if (target == def.name) {
            if (inverse != def.perm) {
                throw Error(ErrorCode::BadInverseLink, "gate " + def.name + " is declared self-inverse but is not");
            }
        } else if (auto it = by_name_.find(target); it != by_name_.end()) {
            const GateDef &other = *it->second;
            if (other.perm != inverse) {
                throw Error(ErrorCode::BadInverseLink, "gate " + target + " is not the inverse of " + def.name);
            }
            if (other.inverse_name && *other.inverse_name != def.name) {
                throw Error(ErrorCode::BadInverseLink,
                            "gate " + target + " is already linked to inverse " + *other.inverse_name);
            }
        }
    }
    for (const GatePtr &other : order_) {
        if (other->inverse_name == def.name && other->perm != inverse) {
            throw Error(ErrorCode::BadInverseLink,
                        "gate " + other->name + " names " + def.name + " as its inverse, but it is not");
        }
    }

    auto ptr = std::make_shared<const GateDef>(std::move(def));
    by_name_[ptr->name] = ptr;
    order_.push_back(ptr);
    return ptr;
}

bool GateRegistry::contains(const std::string &name) const {
    return by_name_.count(name) != 0;
}

GatePtr GateRegistry::get(const std::string &name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) {
        throw Error(ErrorCode::UnknownGate, "unknown gate " + name);
    }
    return it->second;
}

GatePtr GateRegistry::registered_inverse(const GateDef &g) const {
    if (g.inverse_name) {
        auto it = by_name_.find(*g.inverse_name);
        if (it != by_name_.end()) {
            return it->second;
        }
    }
    for (const GatePtr &other : order_) {
        if (other->inverse_name == g.name && other->perm == perm_invert(g.perm)) {
            return other;
        }
    }
    return nullptr;
}

namespace {

TruthPerm perm_from_strings(std::initializer_list<std::pair<const char *, const char *>> rows) {
    std::vector<std::pair<BitWord, BitWord>> parsed;
    for (const auto &[in, out] : rows) {
        parsed.emplace_back(BitWord::from_string(in), BitWord::from_string(out));
    }
    return TruthPerm::from_rows(parsed);
}

template <typename F>
TruthPerm perm_from_function(size_t width, F f) {
    std::vector<uint32_t> table(size_t{1} << width);
    for (uint32_t x = 0; x < table.size(); x++) {
        table[x] = BitWord(f(BitWord(width, x).bits())).value();
    }
    return TruthPerm(width, std::move(table));
}

struct Term {
    size_t input;
    bool inverted;
};

/// One majority node per output, each reading primary inputs only.
MvNetwork single_level_network(std::vector<std::string> input_names, std::vector<std::string> output_names,
                               const std::vector<std::array<Term, 3>> &terms) {
    MvNetwork net;
    net.inputs = input_names.size();
    net.input_names = std::move(input_names);
    net.node_names = std::move(output_names);
    for (size_t k = 0; k < terms.size(); k++) {
        MvNode node;
        for (size_t j = 0; j < 3; j++) {
            node.operands[j] = MvRef::input(terms[k][j].input);
            node.complemented[j] = terms[k][j].inverted;
        }
        net.nodes.push_back(node);
        net.outputs.push_back(MvRef::node(k));
    }
    return net;
}

GateDef mv_gate(std::string name, std::string inverse, MvNetwork net) {
    TruthPerm perm = net.to_perm();
    return GateDef{std::move(name), std::move(perm), std::nullopt, std::move(inverse), std::move(net)};
}

GateRegistry make_builtins() {
    GateRegistry r;
    r.add(GateDef{"NOT", TruthPerm(1, {1, 0}), 1, "NOT", std::nullopt});
    r.add(GateDef{"FG", perm_from_function(2, [](const std::vector<bool> &v) {
                      return std::vector<bool>{v[0], v[0] != v[1]};
                  }),
                  1, "FG", std::nullopt});
    r.add(GateDef{"TOF", perm_from_function(3, [](const std::vector<bool> &v) {
                      return std::vector<bool>{v[0], v[1], (v[0] && v[1]) != v[2]};
                  }),
                  5, "TOF", std::nullopt});
    r.add(GateDef{"FRE", perm_from_function(3, [](const std::vector<bool> &v) {
                      return v[0] ? std::vector<bool>{true, v[2], v[1]} : v;
                  }),
                  5, "FRE", std::nullopt});

    // Rows are written A B C D -> P Q R S; the leftmost character is wire 0.
    r.add(GateDef{"OTG",
                  perm_from_strings({
                      {"0000", "0000"}, {"0001", "0010"}, {"0010", "0001"}, {"0011", "0011"},
                      {"0100", "0110"}, {"0101", "0101"}, {"0110", "0111"}, {"0111", "0100"},
                      {"1000", "1110"}, {"1001", "1101"}, {"1010", "1111"}, {"1011", "1100"},
                      {"1100", "1001"}, {"1101", "1011"}, {"1110", "1000"}, {"1111", "1010"},
                  }),
                  6, "IOTG", std::nullopt});
    r.add(GateDef{"IOTG",
                  perm_from_strings({
                      {"0000", "0000"}, {"0001", "0010"}, {"0010", "0001"}, {"0011", "0011"},
                      {"0100", "0111"}, {"0101", "0101"}, {"0110", "0100"}, {"0111", "0110"},
                      {"1000", "1110"}, {"1001", "1100"}, {"1010", "1111"}, {"1011", "1101"},
                      {"1100", "1011"}, {"1101", "1001"}, {"1110", "1000"}, {"1111", "1010"},
                  }),
                  6, "OTG", std::nullopt});

    constexpr bool n = false, y = true;
    r.add(mv_gate("QCA1", "IQCA1",
                  single_level_network({"A", "B", "C"}, {"P", "Q", "R"},
                                       {{{{0, n}, {1, n}, {2, n}}}, {{{0, n}, {1, n}, {2, y}}}, {{{0, y}, {1, n}, {2, n}}}})));
    r.add(mv_gate("QCA2", "IQCA2",
                  single_level_network({"A", "B", "C"}, {"P", "Q", "R"},
                                       {{{{0, n}, {1, n}, {2, n}}}, {{{0, n}, {1, n}, {2, y}}}, {{{0, y}, {1, n}, {2, y}}}})));
    r.add(mv_gate("IQCA1", "QCA1",
                  single_level_network({"P", "Q", "R"}, {"A", "B", "C"},
                                       {{{{0, n}, {1, n}, {2, y}}}, {{{0, n}, {1, n}, {2, n}}}, {{{0, n}, {1, y}, {2, n}}}})));
    r.add(mv_gate("IQCA2", "QCA2",
                  single_level_network({"P", "Q", "R"}, {"A", "B", "C"},
                                       {{{{0, n}, {1, n}, {2, y}}}, {{{0, n}, {1, n}, {2, n}}}, {{{0, n}, {1, y}, {2, y}}}})));
    return r;
}

}  // namespace

const GateRegistry &builtin_gates() {
    static const GateRegistry registry = make_builtins();
    return registry;
}

GateRegistry builtin_registry() {
    return builtin_gates();
}

bool is_builtin_gate(const GateDef &g) {
    const GateRegistry &b = builtin_gates();
    return b.contains(g.name) && b.lookup(g.name) == g;
}

GatePtr derive_inverse(const GatePtr &g, const GateRegistry *registry) {
    TruthPerm inverse = perm_invert(g->perm);
    if (inverse == g->perm) {
        return g;
    }
    auto accept = [&](const GatePtr &candidate) {
        return candidate && candidate->perm == inverse;
    };
    if (registry) {
        if (GatePtr inv = registry->registered_inverse(*g); accept(inv)) {
            return inv;
        }
    }
    if (GatePtr inv = builtin_gates().registered_inverse(*g); accept(inv)) {
        return inv;
    }
    return std::make_shared<const GateDef>(GateDef{g->name + "_INV", inverse, g->quantum_cost, g->name, std::nullopt});
}

XorBound xor_lower_bound(const GateDef &g) {
    size_t w = g.width();
    std::vector<std::set<uint32_t>> polys;
    for (size_t j = 0; j < w; j++) {
        std::vector<bool> truth(g.perm.size());
        for (uint32_t x = 0; x < truth.size(); x++) {
            truth[x] = (g.perm(x) >> j) & 1;
        }
        polys.push_back(anf_transform(truth).monomials);
    }

    XorBound result;
    std::set<uint32_t> products;
    for (size_t j = 0; j < w; j++) {
        std::set<uint32_t> remaining = polys[j];
        int substituted = 0;
        while (true) {
            int best = -1;
            for (size_t k = 0; k < j; k++) {
                const auto &candidate = polys[k];
                if (candidate.empty() || candidate.size() > remaining.size()) {
                    continue;
                }
                if (!std::includes(remaining.begin(), remaining.end(), candidate.begin(), candidate.end())) {
                    continue;
                }
                if (best < 0 || candidate.size() > polys[best].size()) {
                    best = (int)k;
                }
            }
            if (best < 0) {
                break;
            }
            for (uint32_t m : polys[best]) {
                remaining.erase(m);
            }
            substituted++;
        }
        int operands = (int)remaining.size() + substituted;
        result.xor_count += std::max(0, operands - 1);
        for (uint32_t m : polys[j]) {
            if (monomial_degree(m) >= 2) {
                products.insert(m);
            }
        }
    }
    result.and_count = (int)products.size();
    return result;
}

}  // namespace revced
