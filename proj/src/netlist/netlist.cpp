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

#include "revced/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "revced/error.hpp"

namespace revced {

const CircuitBlock &NetlistDocument::circuit(const std::string &name) const {
    for (const CircuitBlock &b : circuits) {
        if (b.circuit.name == name) {
            return b;
        }
    }
    throw Error(ErrorCode::InvalidCircuit, "netlist has no circuit named " + name);
}

CedCircuit NetlistDocument::ced(const std::string &name) const {
    const CircuitBlock &b = circuit(name);
    if (!b.compare) {
        throw Error(ErrorCode::InvalidCircuit, "circuit " + name + " has no compare directive");
    }
    return ced_from_tagged(b.circuit, *b.compare);
}

namespace {

struct Token {
    std::string text;
    size_t column;
};

bool is_punct(char c) {
    return c == '=' || c == ',' || c == '(' || c == ')' || c == '[' || c == ']';
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < line.size()) {
        char c = line[k];
        if (c == '#') {
            break;
        }
        if (std::isspace((unsigned char)c)) {
            k++;
            continue;
        }
        if (is_punct(c)) {
            out.push_back(Token{std::string(1, c), k + 1});
            k++;
            continue;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace((unsigned char)line[k]) && !is_punct(line[k]) && line[k] != '#') {
            k++;
        }
        out.push_back(Token{std::string(line.substr(start, k - start)), start + 1});
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum((unsigned char)c) || c == '_' || c == '.';
    });
}

/// Token stream of one statement.
class Cursor {
   public:
    Cursor(std::vector<Token> tokens, size_t line, size_t end_column)
        : tokens_(std::move(tokens)), line_(line), end_column_(end_column) {
    }

    bool done() const {
        return pos_ >= tokens_.size();
    }
    const Token &peek() const {
        return tokens_[pos_];
    }
    bool peek_is(std::string_view text) const {
        return !done() && peek().text == text;
    }
    size_t line() const {
        return line_;
    }
    size_t column() const {
        return done() ? end_column_ : peek().column;
    }

    [[noreturn]] void fail(const std::string &message, ErrorCode code = ErrorCode::Syntax) const {
        throw ParseError(code, line_, column(), message);
    }
    [[noreturn]] void fail_at(const Token &t, const std::string &message, ErrorCode code = ErrorCode::Syntax) const {
        throw ParseError(code, line_, t.column, message);
    }

    Token next(std::string_view what) {
        if (done()) {
            fail("expected " + std::string(what) + " at end of line");
        }
        return tokens_[pos_++];
    }
    void expect(std::string_view text) {
        if (done() || peek().text != text) {
            fail("expected '" + std::string(text) + "'" + (done() ? "" : " but found '" + peek().text + "'"));
        }
        pos_++;
    }
    Token identifier(std::string_view what) {
        Token t = next(what);
        if (!is_identifier(t.text)) {
            fail_at(t, "expected " + std::string(what) + " but found '" + t.text + "'");
        }
        return t;
    }
    void finish() const {
        if (!done()) {
            fail("unexpected '" + peek().text + "'");
        }
    }

    /// Words up to (not including) `stop` or the end of the statement.
    std::vector<Token> identifiers_until(std::string_view stop, std::string_view what) {
        std::vector<Token> out;
        while (!done() && peek().text != stop) {
            out.push_back(identifier(what));
        }
        return out;
    }

   private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    size_t line_;
    size_t end_column_;
};

size_t parse_count(Cursor &cur, std::string_view what) {
    Token t = cur.next(what);
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) {
            return std::isdigit((unsigned char)c);
        }) || t.text.size() > 9) {
        cur.fail_at(t, "expected " + std::string(what) + " but found '" + t.text + "'");
    }
    return std::stoul(t.text);
}

std::optional<int> parse_cost(Cursor &cur) {
    if (cur.peek_is("none")) {
        cur.next("cost");
        return std::nullopt;
    }
    return (int)parse_count(cur, "a non-negative cost or 'none'");
}

std::optional<std::string> parse_inverse_name(Cursor &cur) {
    Token t = cur.identifier("inverse gate name or 'none'");
    if (t.text == "none") {
        return std::nullopt;
    }
    return t.text;
}

/// Rethrows library errors raised while processing a statement with its position.
template <class F>
auto at_position(size_t line, size_t column, F &&f) {
    try {
        return f();
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(e.code(), line, column, e.what());
    }
}

struct MvDraft {
    GateDef def;
    MvNetwork net;
    SourcePos pos;
    std::vector<bool> is_output_node;
};

struct BlockDraft {
    CircuitBlock block;
    std::map<std::string, SourcePos> drivers;
    SourcePos output_pos;
    SourcePos garbage_pos;
};

class Parser {
   public:
    NetlistDocument parse(std::string_view text) {
        size_t line_no = 0;
        size_t start = 0;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            line_no++;
            last_line_ = line_no;
            std::vector<Token> tokens = tokenize(line);
            if (!tokens.empty()) {
                Cursor cur(std::move(tokens), line_no, line.size() + 1);
                statement(cur);
            }
            start = end + 1;
        }
        if (mv_) {
            finish_mv();
        }
        if (block_) {
            throw ParseError(ErrorCode::Syntax, last_line_, 1,
                             "circuit " + block_->block.circuit.name + " is missing 'end'");
        }
        if (!saw_version_) {
            throw ParseError(ErrorCode::Syntax, 1, 1, "netlist must start with 'version 1'");
        }
        for (size_t k = 0; k < doc_.gate_defs.size(); k++) {
            const GateDef &def = doc_.gate_defs[k];
            if (def.inverse_name && !doc_.registry.contains(*def.inverse_name)) {
                throw ParseError(ErrorCode::BadInverseLink, doc_.gate_pos[k].line, doc_.gate_pos[k].column,
                                 "gate " + def.name + " names inverse " + *def.inverse_name +
                                     ", which is never defined");
            }
        }
        return std::move(doc_);
    }

   private:
    void statement(Cursor &cur) {
        Token head = cur.next("statement");
        if (!saw_version_) {
            if (head.text != "version") {
                cur.fail_at(head, "netlist must start with 'version 1'");
            }
            Token v = cur.next("version number");
            if (v.text != "1") {
                cur.fail_at(v, "unsupported netlist version '" + v.text + "'");
            }
            cur.finish();
            saw_version_ = true;
            return;
        }
        if (mv_ && head.text != "node" && head.text != "out") {
            finish_mv();
        }
        if (block_) {
            block_statement(cur, head);
            return;
        }
        if (head.text == "defgate") {
            defgate(cur, head);
        } else if (head.text == "defgate-mv") {
            defgate_mv(cur, head);
        } else if (head.text == "node" || head.text == "out") {
            if (!mv_) {
                cur.fail_at(head, "'" + head.text + "' outside a defgate-mv definition");
            }
            mv_line(cur, head);
        } else if (head.text == "circuit") {
            circuit(cur, head);
        } else if (head.text == "version") {
            cur.fail_at(head, "duplicate version statement");
        } else {
            cur.fail_at(head, "unknown statement '" + head.text + "'");
        }
    }

    /// `key=value` attributes in any order; returns the keys seen.
    template <class Handler>
    void attributes(Cursor &cur, const std::set<std::string> &allowed, Handler &&handle) {
        std::set<std::string> seen;
        while (!cur.done()) {
            Token key = cur.identifier("attribute name");
            if (!allowed.count(key.text)) {
                cur.fail_at(key, "unknown attribute '" + key.text + "'");
            }
            if (!seen.insert(key.text).second) {
                cur.fail_at(key, "attribute '" + key.text + "' given twice");
            }
            cur.expect("=");
            handle(key);
        }
    }

    void register_gate(GateDef def, const SourcePos &pos) {
        at_position(pos.line, pos.column, [&] {
            doc_.registry.add(def);
            return 0;
        });
        doc_.gate_defs.push_back(std::move(def));
        doc_.gate_pos.push_back(pos);
    }

    void defgate(Cursor &cur, const Token &head) {
        Token name = cur.identifier("gate name");
        std::optional<size_t> width;
        std::vector<uint32_t> table;
        bool has_perm = false;
        GateDef def;
        def.name = name.text;
        attributes(cur, {"width", "perm", "cost", "inverse"}, [&](const Token &key) {
            if (key.text == "width") {
                width = parse_count(cur, "gate width");
            } else if (key.text == "perm") {
                has_perm = true;
                cur.expect("[");
                while (!cur.peek_is("]")) {
                    table.push_back((uint32_t)parse_count(cur, "permutation entry"));
                    if (!cur.peek_is("]")) {
                        cur.expect(",");
                    }
                }
                cur.expect("]");
            } else if (key.text == "cost") {
                def.quantum_cost = parse_cost(cur);
            } else {
                def.inverse_name = parse_inverse_name(cur);
            }
        });
        if (!width) {
            cur.fail("defgate " + name.text + " needs width=<n>");
        }
        if (!has_perm) {
            cur.fail("defgate " + name.text + " needs perm=[...]");
        }
        def.perm = at_position(cur.line(), head.column, [&] {
            return TruthPerm(*width, table);
        });
        register_gate(std::move(def), SourcePos{cur.line(), head.column});
    }

    void defgate_mv(Cursor &cur, const Token &head) {
        MvDraft draft;
        draft.pos = SourcePos{cur.line(), head.column};
        draft.def.name = cur.identifier("gate name").text;
        std::optional<size_t> inputs;
        std::vector<std::string> names;
        attributes(cur, {"inputs", "in", "cost", "inverse"}, [&](const Token &key) {
            if (key.text == "inputs") {
                inputs = parse_count(cur, "input count");
            } else if (key.text == "in") {
                names.push_back(cur.identifier("input name").text);
                while (cur.peek_is(",")) {
                    cur.expect(",");
                    names.push_back(cur.identifier("input name").text);
                }
            } else if (key.text == "cost") {
                draft.def.quantum_cost = parse_cost(cur);
            } else {
                draft.def.inverse_name = parse_inverse_name(cur);
            }
        });
        if (!inputs || *inputs == 0 || *inputs > MAX_EXHAUSTIVE_WIDTH) {
            cur.fail("defgate-mv " + draft.def.name + " needs inputs=<n> between 1 and 20");
        }
        if (names.empty()) {
            for (size_t k = 0; k < *inputs; k++) {
                names.push_back(std::string(1, (char)('A' + k)));
            }
        }
        if (names.size() != *inputs) {
            cur.fail("defgate-mv " + draft.def.name + " lists " + std::to_string(names.size()) + " input names for " +
                         std::to_string(*inputs) + " inputs",
                     ErrorCode::ArityMismatch);
        }
        if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
            cur.fail("defgate-mv " + draft.def.name + " repeats an input name");
        }
        draft.net.inputs = *inputs;
        draft.net.input_names = names;
        mv_ = std::move(draft);
    }

    MvRef mv_term(Cursor &cur, bool &complemented) {
        Token t = cur.next("majority operand");
        std::string name = t.text;
        complemented = !name.empty() && name[0] == '~';
        if (complemented) {
            name.erase(0, 1);
        }
        const MvNetwork &net = mv_->net;
        auto in = std::find(net.input_names.begin(), net.input_names.end(), name);
        if (in != net.input_names.end()) {
            return MvRef::input((size_t)(in - net.input_names.begin()));
        }
        auto node = std::find(net.node_names.begin(), net.node_names.end(), name);
        if (node != net.node_names.end()) {
            return MvRef::node((size_t)(node - net.node_names.begin()));
        }
        cur.fail_at(t, "majority operand '" + t.text + "' is neither an input nor an earlier node");
    }

    void mv_line(Cursor &cur, const Token &head) {
        Token name = cur.identifier("node name");
        MvNetwork &net = mv_->net;
        if (std::count(net.input_names.begin(), net.input_names.end(), name.text) ||
            std::count(net.node_names.begin(), net.node_names.end(), name.text)) {
            cur.fail_at(name, "majority node name '" + name.text + "' is already used", ErrorCode::DuplicateDriver);
        }
        cur.expect("=");
        Token mv = cur.next("MV(...)");
        if (mv.text != "MV") {
            cur.fail_at(mv, "expected MV(...) but found '" + mv.text + "'");
        }
        cur.expect("(");
        MvNode node;
        for (size_t k = 0; k < 3; k++) {
            if (k) {
                cur.expect(",");
            }
            node.operands[k] = mv_term(cur, node.complemented[k]);
        }
        cur.expect(")");
        cur.finish();
        net.nodes.push_back(node);
        net.node_names.push_back(name.text);
        if (head.text == "out") {
            net.outputs.push_back(MvRef::node(net.nodes.size() - 1));
        }
    }

    void finish_mv() {
        MvDraft draft = std::move(*mv_);
        mv_.reset();
        const SourcePos &pos = draft.pos;
        if (draft.net.outputs.size() != draft.net.inputs) {
            throw ParseError(ErrorCode::ArityMismatch, pos.line, pos.column,
                             "defgate-mv " + draft.def.name + " declares " + std::to_string(draft.net.inputs) +
                                 " inputs but " + std::to_string(draft.net.outputs.size()) + " out lines");
        }
        draft.def.perm = at_position(pos.line, pos.column, [&] {
            return draft.net.to_perm();
        });
        draft.def.mv_network = std::move(draft.net);
        register_gate(std::move(draft.def), pos);
    }

    void circuit(Cursor &cur, const Token &head) {
        BlockDraft draft;
        draft.block.pos = SourcePos{cur.line(), head.column};
        Token name = cur.identifier("circuit name");
        for (const CircuitBlock &b : doc_.circuits) {
            if (b.circuit.name == name.text) {
                cur.fail_at(name, "circuit " + name.text + " is defined twice", ErrorCode::DuplicateName);
            }
        }
        draft.block.circuit.name = name.text;
        bool has_mode = false;
        attributes(cur, {"mode"}, [&](const Token &) {
            Token m = cur.next("mode");
            auto mode = parse_mode(m.text);
            if (!mode) {
                cur.fail_at(m, "mode must be quantum or qca, not '" + m.text + "'");
            }
            draft.block.circuit.mode = *mode;
            has_mode = true;
        });
        if (!has_mode) {
            cur.fail("circuit " + name.text + " needs mode=quantum|qca");
        }
        block_ = std::move(draft);
    }

    void define(Cursor &cur, const Token &wire) {
        auto [it, fresh] = block_->drivers.emplace(wire.text, SourcePos{cur.line(), wire.column});
        if (!fresh) {
            cur.fail_at(wire,
                        "wire " + wire.text + " already has a driver (line " + std::to_string(it->second.line) + ")",
                        ErrorCode::DuplicateDriver);
        }
    }

    void block_statement(Cursor &cur, const Token &head) {
        Circuit &c = block_->block.circuit;
        if (head.text == "input") {
            std::vector<Token> wires = cur.identifiers_until("", "input wire");
            if (wires.empty()) {
                cur.fail("input needs at least one wire");
            }
            for (const Token &w : wires) {
                define(cur, w);
                c.add_input(w.text);
            }
        } else if (head.text == "const") {
            Token w = cur.identifier("constant wire");
            cur.expect("=");
            Token v = cur.next("0 or 1");
            if (v.text != "0" && v.text != "1") {
                cur.fail_at(v, "constant value must be 0 or 1, not '" + v.text + "'");
            }
            cur.finish();
            define(cur, w);
            c.add_const(w.text, v.text == "1");
        } else if (head.text == "gate") {
            gate(cur);
        } else if (head.text == "output") {
            std::vector<Token> wires = cur.identifiers_until("", "output wire");
            if (wires.empty()) {
                cur.fail("output needs at least one wire");
            }
            block_->output_pos = SourcePos{cur.line(), head.column};
            for (const Token &w : wires) {
                c.add_output(w.text);
            }
        } else if (head.text == "garbage") {
            block_->garbage_pos = SourcePos{cur.line(), head.column};
            if (!c.declared_garbage) {
                c.declared_garbage.emplace();
            }
            for (const Token &w : cur.identifiers_until("", "garbage wire")) {
                c.declared_garbage->push_back(w.text);
            }
        } else if (head.text == "compare") {
            if (block_->block.compare) {
                cur.fail_at(head, "circuit " + c.name + " has two compare directives");
            }
            Token s = cur.next("scheme");
            auto scheme = parse_scheme(s.text);
            if (!scheme) {
                cur.fail_at(s, "compare scheme must be inverse or duplicate, not '" + s.text + "'");
            }
            CompareSpec directive;
            directive.scheme = *scheme;
            for (const Token &w : cur.identifiers_until("=", "reference wire")) {
                directive.reference.push_back(w.text);
            }
            cur.expect("=");
            for (const Token &w : cur.identifiers_until("", "check wire")) {
                directive.check.push_back(w.text);
            }
            block_->block.compare = std::move(directive);
            compare_pos_ = SourcePos{cur.line(), head.column};
        } else if (head.text == "end") {
            cur.finish();
            end_block();
        } else {
            cur.fail_at(head, "unknown statement '" + head.text + "' inside circuit " + c.name);
        }
    }

    void gate(Cursor &cur) {
        Token name = cur.identifier("gate name");
        if (!doc_.registry.contains(name.text)) {
            cur.fail_at(name, "unknown gate " + name.text, ErrorCode::UnknownGate);
        }
        GatePtr g = doc_.registry.get(name.text);
        std::vector<Token> in = cur.identifiers_until("->", "input wire");
        size_t arrow_col = cur.column();
        cur.expect("->");
        std::vector<Token> out = cur.identifiers_until("region", "output wire");
        Region region = Region::None;
        if (cur.peek_is("region")) {
            cur.next("region");
            cur.expect("=");
            Token r = cur.next("region");
            auto parsed = parse_region(r.text);
            if (!parsed || *parsed == Region::None) {
                cur.fail_at(r, "region must be R, Rinv, Rdup or copy, not '" + r.text + "'");
            }
            region = *parsed;
        }
        cur.finish();
        if (in.size() != g->width()) {
            throw ParseError(ErrorCode::ArityMismatch, cur.line(), name.column,
                             "gate " + g->name + " expects " + std::to_string(g->width()) + " inputs but " +
                                 std::to_string(in.size()) + " were given");
        }
        if (out.size() != g->width()) {
            throw ParseError(ErrorCode::ArityMismatch, cur.line(), arrow_col,
                             "gate " + g->name + " expects " + std::to_string(g->width()) + " outputs but " +
                                 std::to_string(out.size()) + " were given");
        }
        for (const Token &w : out) {
            define(cur, w);
        }
        std::vector<std::string> in_names;
        std::vector<std::string> out_names;
        for (const Token &w : in) {
            in_names.push_back(w.text);
        }
        for (const Token &w : out) {
            out_names.push_back(w.text);
        }
        block_->block.circuit.add_gate(g, in_names, out_names, region);
        block_->block.instance_pos.push_back(SourcePos{cur.line(), name.column});
    }

    void end_block() {
        BlockDraft draft = std::move(*block_);
        block_.reset();
        CircuitBlock &b = draft.block;
        for (const Violation &v : validate(b.circuit)) {
            if (v.kind == Violation::Kind::FanOut) {
                continue;
            }
            SourcePos pos = b.pos;
            if (v.instance && *v.instance < b.instance_pos.size()) {
                pos = b.instance_pos[*v.instance];
            } else if (v.kind == Violation::Kind::UndrivenOutput) {
                pos = draft.output_pos;
            } else if (v.kind == Violation::Kind::GarbageNotSink) {
                pos = draft.garbage_pos;
            }
            ErrorCode code = v.kind == Violation::Kind::MultipleDrivers ? ErrorCode::DuplicateDriver
                                                                        : ErrorCode::InvalidCircuit;
            throw ParseError(code, pos.line, pos.column, "circuit " + b.circuit.name + ": " + v.message);
        }
        if (b.compare) {
            at_position(compare_pos_.line, compare_pos_.column, [&] {
                return ced_from_tagged(b.circuit, *b.compare);
            });
        }
        doc_.circuits.push_back(std::move(b));
    }

    NetlistDocument doc_;
    bool saw_version_ = false;
    size_t last_line_ = 0;
    std::optional<MvDraft> mv_;
    std::optional<BlockDraft> block_;
    SourcePos compare_pos_;
};

std::string mv_operand(const MvNetwork &net, const MvRef &ref, bool complemented) {
    std::string name = ref.kind == MvRef::Kind::Input ? net.input_names.at(ref.index) : net.node_names.at(ref.index);
    return (complemented ? "~" : "") + name;
}

std::string joined(const std::vector<std::string> &words, const std::string &sep) {
    std::string out;
    for (size_t k = 0; k < words.size(); k++) {
        out += (k ? sep : "") + words[k];
    }
    return out;
}

void emit_gate_header(std::ostringstream &out, const GateDef &g) {
    out << " cost=" << (g.quantum_cost ? std::to_string(*g.quantum_cost) : "none");
    out << " inverse=" << (g.inverse_name ? *g.inverse_name : "none") << "\n";
}

void emit_gate(std::ostringstream &out, const GateDef &g) {
    if (g.mv_network) {
        const MvNetwork &net = *g.mv_network;
        out << "defgate-mv " << g.name << " inputs=" << net.inputs << " in=" << joined(net.input_names, ",");
        emit_gate_header(out, g);
        for (size_t k = 0; k < net.nodes.size(); k++) {
            bool is_out = std::find(net.outputs.begin(), net.outputs.end(), MvRef::node(k)) != net.outputs.end();
            const MvNode &node = net.nodes[k];
            out << "    " << (is_out ? "out " : "node ") << net.node_names.at(k) << " = MV(";
            for (size_t j = 0; j < 3; j++) {
                out << (j ? "," : "") << mv_operand(net, node.operands[j], node.complemented[j]);
            }
            out << ")\n";
        }
        return;
    }
    out << "defgate " << g.name << " width=" << g.width() << " perm=[";
    for (uint32_t x = 0; x < g.perm.size(); x++) {
        out << (x ? "," : "") << g.perm(x);
    }
    out << "]";
    emit_gate_header(out, g);
}

void emit_block(std::ostringstream &out, const CircuitBlock &b) {
    const Circuit &c = b.circuit;
    out << "circuit " << c.name << " mode=" << mode_name(c.mode) << "\n";
    if (!c.inputs.empty()) {
        out << "    input " << joined(c.inputs, " ") << "\n";
    }
    for (const auto &[w, v] : c.constants) {
        out << "    const " << w << " = " << (v ? 1 : 0) << "\n";
    }
    for (const GateInstance &inst : c.instances) {
        out << "    gate " << inst.gate->name << " " << joined(inst.in_wires, " ") << " -> "
            << joined(inst.out_wires, " ");
        if (inst.region != Region::None) {
            out << " region=" << region_name(inst.region);
        }
        out << "\n";
    }
    if (!c.outputs.empty()) {
        out << "    output " << joined(c.outputs, " ") << "\n";
    }
    if (c.declared_garbage) {
        out << "    garbage " << joined(*c.declared_garbage, " ") << "\n";
    }
    if (b.compare) {
        out << "    compare " << scheme_name(b.compare->scheme) << " " << joined(b.compare->reference, " ") << " = "
            << joined(b.compare->check, " ") << "\n";
    }
    out << "end\n";
}

}  // namespace

NetlistDocument parse_netlist(std::string_view text) {
    return Parser().parse(text);
}

std::string emit_netlist(const NetlistDocument &doc) {
    std::ostringstream out;
    out << "version 1\n";
    if (!doc.gate_defs.empty()) {
        out << "\n";
        for (const GateDef &g : doc.gate_defs) {
            emit_gate(out, g);
        }
    }
    for (const CircuitBlock &b : doc.circuits) {
        out << "\n";
        emit_block(out, b);
    }
    return out.str();
}

NetlistDocument single_circuit_document(const Circuit &c, const std::optional<CompareSpec> &compare) {
    NetlistDocument doc;
    for (const GateInstance &inst : c.instances) {
        const GateDef &g = *inst.gate;
        if (is_builtin_gate(g) || doc.registry.contains(g.name)) {
            continue;
        }
        doc.registry.add(g);
        doc.gate_defs.push_back(g);
        doc.gate_pos.push_back(SourcePos{});
    }
    CircuitBlock b;
    b.circuit = c;
    b.compare = compare;
    doc.circuits.push_back(std::move(b));
    return doc;
}

}  // namespace revced
