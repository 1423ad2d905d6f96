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

#include "revced/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "revced/campaign.hpp"
#include "revced/ced.hpp"
#include "revced/error.hpp"
#include "revced/netlist.hpp"
#include "revced/report.hpp"

namespace revced {

namespace {

/// A failure that maps to exit code 2 but is not a library error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NetlistDocument load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read netlist file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_netlist(buffer.str());
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

double improvement(double base, double ours) {
    return (base - ours) / base * 100.0;
}

/// Wrapper checked by campaign-style commands: the block's own compare
/// directive, or a freshly built inverse-compare wrapper.
CedCircuit wrapper_for(const NetlistDocument &doc, const CircuitBlock &block) {
    if (block.compare) {
        return ced_from_tagged(block.circuit, *block.compare);
    }
    return build_inverse_compare(block.circuit, &doc.registry);
}

struct Common {
    std::string file;
    std::string circuit;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("file", c.file, "Netlist file")->required();
    cmd->add_option("circuit", c.circuit, "Circuit name inside the file")->required();
}

int cmd_truth_table(const Common &common, bool json, std::ostream &out) {
    NetlistDocument doc = load(common.file);
    TruthTable t = truth_function(doc.circuit(common.circuit).circuit);
    if (json) {
        out << truth_table_to_json(t).dump(2) << "\n";
        return EXIT_OK;
    }
    std::vector<std::string> primary(t.output_wires.begin(), t.output_wires.begin() + (long)t.primary_count);
    std::vector<std::string> rest(t.output_wires.begin() + (long)t.primary_count, t.output_wires.end());
    auto join = [](const std::vector<std::string> &v) {
        std::string s;
        for (const std::string &w : v) {
            s += (s.empty() ? "" : " ") + w;
        }
        return s;
    };
    out << "# inputs: " << join(t.input_wires) << "\n";
    out << "# outputs: " << join(primary) << (rest.empty() ? "" : " | " + join(rest)) << "\n";
    for (size_t r = 0; r < t.rows; r++) {
        std::string in;
        for (size_t k = 0; k < t.input_wires.size(); k++) {
            in.push_back(((r >> k) & 1) ? '1' : '0');
        }
        std::string row = t.row_str(r);
        out << in << " -> " << row.substr(0, t.primary_count);
        if (!rest.empty()) {
            out << " | " << row.substr(t.primary_count);
        }
        out << "\n";
    }
    return EXIT_OK;
}

int cmd_invert(const Common &common, const std::string &output, std::ostream &out) {
    NetlistDocument doc = load(common.file);
    Circuit inv = invert_circuit(doc.circuit(common.circuit).circuit, &doc.registry);
    write_text(output, emit_netlist(single_circuit_document(inv)), out);
    return EXIT_OK;
}

int cmd_verify(const Common &common, std::ostream &out) {
    NetlistDocument doc = load(common.file);
    const CircuitBlock &block = doc.circuit(common.circuit);
    std::vector<Violation> violations = validate(block.circuit);
    if (!violations.empty()) {
        for (const Violation &v : violations) {
            out << "violation " << violation_kind_name(v.kind) << ": " << v.message << "\n";
        }
        out << "validate: failed (" << violations.size() << " violations)\n";
        out << "verify: failed\n";
        return EXIT_CHECK_FAILED;
    }
    out << "validate: ok\n";

    bool ok = true;
    TruthTable t = truth_function(block.circuit);
    std::set<std::string> distinct;
    for (size_t r = 0; r < t.rows; r++) {
        distinct.insert(t.row_str(r));
    }
    out << "reversible: " << distinct.size() << "/" << t.rows << " distinct output rows\n";
    ok = ok && distinct.size() == t.rows;

    CedCircuit ced = wrapper_for(doc, block);
    RegenerationCheck regen = check_regeneration(ced);
    if (ced.scheme() == Scheme::InverseCompare) {
        out << "regeneration: " << regen.passing << "/" << regen.total << " inputs\n";
    } else {
        out << "copy agreement: " << regen.passing << "/" << regen.total << " inputs\n";
    }
    ok = ok && regen.ok();
    out << (ok ? "verify: ok\n" : "verify: failed\n");
    return ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

std::map<std::string, double> parse_baseline(const std::string &text) {
    static const std::map<std::string, std::string> keys = {
        {"gates", "gate_count"}, {"garbage", "garbage_count"}, {"delay", "delay_levels"}, {"cost", "quantum_cost"}};
    std::map<std::string, double> out;
    for (const std::string &item : split(text, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || !keys.count(item.substr(0, eq))) {
            throw UsageError("baseline entries look like gates=8,garbage=3,delay=8,cost=30; got '" + item + "'");
        }
        try {
            size_t used = 0;
            std::string value = item.substr(eq + 1);
            double v = std::stod(value, &used);
            if (used != value.size()) {
                throw std::invalid_argument(value);
            }
            out[keys.at(item.substr(0, eq))] = v;
        } catch (const std::logic_error &) {
            throw UsageError("baseline value in '" + item + "' is not a number");
        }
    }
    return out;
}

int cmd_metrics(const Common &common, const std::string &baseline, std::ostream &out) {
    NetlistDocument doc = load(common.file);
    Metrics m = metrics(doc.circuit(common.circuit).circuit);
    nlohmann::json j = metrics_to_json(m);
    j["circuit"] = common.circuit;
    j["quantum_cost_note"] =
        m.quantum_cost ? "sum of the registered per-gate costs; the ideal comparator is not counted"
                       : "unknown: at least one gate carries no quantum cost";
    if (!baseline.empty()) {
        std::map<std::string, double> base = parse_baseline(baseline);
        nlohmann::json improvements = nlohmann::json::object();
        std::map<std::string, std::optional<double>> ours = {
            {"gate_count", m.gate_count},
            {"garbage_count", m.garbage_count},
            {"delay_levels", m.delay_levels},
            {"quantum_cost", m.quantum_cost ? std::optional<double>(*m.quantum_cost) : std::nullopt},
        };
        for (const auto &[key, value] : base) {
            if (!ours.at(key) || value == 0) {
                improvements[key] = nullptr;
            } else {
                improvements[key] = improvement(value, *ours.at(key));
            }
        }
        j["baseline"] = base;
        j["improvement_percent"] = improvements;
        if (base.count("quantum_cost")) {
            j["quantum_cost_improvement_note"] =
                "computed from the component cost sum above; a published total that also counts comparator or "
                "copy hardware yields a different percentage";
        }
    }
    out << j.dump(2) << "\n";
    return EXIT_OK;
}

int cmd_ced_build(const Common &common, const std::string &scheme_text, const std::string &output,
                  std::ostream &out) {
    auto scheme = parse_scheme(scheme_text);
    if (!scheme) {
        throw UsageError("--scheme must be inverse or duplicate");
    }
    NetlistDocument doc = load(common.file);
    const Circuit &r = doc.circuit(common.circuit).circuit;
    CedCircuit ced = *scheme == Scheme::InverseCompare ? build_inverse_compare(r, &doc.registry)
                                                       : build_duplicate_compare(r);
    write_text(output, emit_netlist(single_circuit_document(ced.circuit, ced.compare)), out);
    return EXIT_OK;
}

struct CampaignArgs {
    std::string models;
    std::string regions = "R,Rinv";
    bool include_copy = false;
    size_t sample = 0;
    uint64_t seed = 1;
    size_t replacements = 0;
    size_t threads = 1;
    std::string json;
    std::string csv;
};

int cmd_campaign(const Common &common, const CampaignArgs &args, std::ostream &out) {
    ModelSet models;
    for (const std::string &name : split(args.models, ',')) {
        auto classes = parse_model_classes(name);
        if (!classes) {
            throw UsageError("unknown fault model '" + name + "'");
        }
        models.classes.insert(classes->begin(), classes->end());
    }
    if (models.classes.empty()) {
        throw UsageError("--models needs at least one fault model");
    }
    RegionFilter regions;
    for (const std::string &name : split(args.regions, ',')) {
        auto region = parse_region(name);
        if (!region || *region == Region::None) {
            throw UsageError("unknown region '" + name + "'");
        }
        regions.insert(*region);
    }
    if (args.include_copy) {
        regions.insert(Region::Copy);
    }

    NetlistDocument doc = load(common.file);
    CedCircuit ced = wrapper_for(doc, doc.circuit(common.circuit));
    if (models.classes.count(ModelClass::GateReplace)) {
        std::set<size_t> widths;
        for (const GateInstance &inst : ced.circuit.instances) {
            widths.insert(inst.gate->width());
        }
        for (size_t w : widths) {
            auto perms = sample_permutations(w, args.replacements, args.seed + w);
            models.replacements.insert(models.replacements.end(), perms.begin(), perms.end());
        }
    }
    InputMode mode = args.sample ? InputMode::sampled(args.sample, args.seed) : InputMode::all();
    CampaignReport report = campaign(ced, models, regions, mode, args.threads);

    nlohmann::json j = report_to_json(report);
    if (!args.json.empty()) {
        write_text(args.json, j.dump(2) + "\n", out);
    }
    if (!args.csv.empty()) {
        write_text(args.csv, escapes_csv(report), out);
    }
    if (args.json != "-" && args.csv != "-") {
        out << "faults " << report.total_faults << ", cases " << report.total_cases << ", corrupting "
            << report.corrupting_cases << ", detected " << report.detected_cases << ", silent escapes "
            << report.silent_escapes << ", false alarms " << report.false_alarms << "\n";
        out << "coverage " << std::setprecision(6) << report.coverage() << "\n";
    }
    return report.silent_escapes == 0 ? EXIT_OK : EXIT_CHECK_FAILED;
}

struct CompareArgs {
    std::string pairing;
    size_t count = 50;
    uint64_t seed = 1;
    std::string positions;
    std::string json;
};

int cmd_scheme_compare(const Common &common, const CompareArgs &args, std::ostream &out) {
    auto pairing = parse_pairing(args.pairing);
    if (!pairing) {
        throw UsageError("--pairing must be replace or boundary-mask");
    }
    PairingSpec request;
    request.kind = *pairing;
    request.replacement_count = args.count;
    request.seed = args.seed;
    for (const std::string &p : split(args.positions, ',')) {
        try {
            request.instances.push_back(std::stoul(p));
        } catch (const std::logic_error &) {
            throw UsageError("--positions takes instance positions such as 0,1");
        }
    }
    NetlistDocument doc = load(common.file);
    const CircuitBlock &block = doc.circuit(common.circuit);
    SchemeComparison cmp = scheme_compare(block.circuit, request, &doc.registry);
    nlohmann::json j = comparison_to_json(cmp, *pairing);
    j["circuit"] = common.circuit;
    if (!args.json.empty()) {
        write_text(args.json, j.dump(2) + "\n", out);
    }
    if (args.json != "-") {
        for (const auto &[label, report] :
             {std::pair{"duplicate", &cmp.dup_report}, std::pair{"inverse", &cmp.inv_report}}) {
            out << label << ": corrupting " << report->corrupting_cases << ", silent escapes "
                << report->silent_escapes << ", escape rate " << std::setprecision(6) << report->escape_rate()
                << "\n";
        }
    }
    return EXIT_OK;
}

void print_error(std::ostream &out, std::ostream &err, bool json, const std::string &code, const std::string &message,
                 std::optional<std::pair<size_t, size_t>> pos = std::nullopt) {
    if (json) {
        nlohmann::json j = {{"error", {{"code", code}, {"message", message}}}};
        if (pos) {
            j["error"]["line"] = pos->first;
            j["error"]["column"] = pos->second;
        }
        out << j.dump() << "\n";
    }
    err << "error: " << message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app("Reversible-logic toolkit: build and fault-check inverse-and-compare error detection", "revced");
    app.require_subcommand(1);

    Common common;
    bool json_flag = false;
    std::string output;

    CLI::App *truth = app.add_subcommand("truth-table", "Print the exhaustive truth table of a circuit");
    add_common(truth, common);
    truth->add_flag("--json", json_flag, "Print JSON instead of text");

    CLI::App *invert = app.add_subcommand("invert", "Emit the inverse circuit as a netlist");
    add_common(invert, common);
    invert->add_option("-o,--output", output, "Output file (default stdout)");

    CLI::App *verify = app.add_subcommand("verify", "Validate and check reversibility and regeneration");
    add_common(verify, common);

    std::string baseline;
    CLI::App *metrics_cmd = app.add_subcommand("metrics", "Print gate count, garbage, delay and quantum cost");
    add_common(metrics_cmd, common);
    metrics_cmd->add_option("--baseline", baseline, "Reference numbers, e.g. gates=8,garbage=3,delay=8,cost=30");

    CLI::App *ced = app.add_subcommand("ced", "Error-detection wrappers");
    ced->require_subcommand(1);
    std::string scheme = "inverse";
    CLI::App *build = ced->add_subcommand("build", "Emit an error-detecting wrapper netlist");
    add_common(build, common);
    build->add_option("--scheme", scheme, "inverse or duplicate");
    build->add_option("-o,--output", output, "Output file (default stdout)");

    CampaignArgs camp;
    CLI::App *campaign_cmd = app.add_subcommand("campaign", "Exhaustive fault-injection campaign");
    add_common(campaign_cmd, common);
    campaign_cmd
        ->add_option("--models", camp.models,
                     "Comma list of bitflip, stuckat, outputmask, inputmask, replace, mvbias, mvstuckat, "
                     "mvinvert, mv")
        ->required();
    campaign_cmd->add_option("--region", camp.regions, "Comma list of R, Rinv, Rdup, copy");
    campaign_cmd->add_flag("--include-copy", camp.include_copy, "Also inject faults into copy gates");
    campaign_cmd->add_option("--sample", camp.sample, "Sample this many inputs instead of all");
    campaign_cmd->add_option("--seed", camp.seed, "Seed for input and replacement sampling");
    campaign_cmd->add_option("--replacements", camp.replacements, "Random replacement functions per gate width");
    campaign_cmd->add_option("--threads", camp.threads, "Worker threads (0 = all cores)");
    campaign_cmd->add_option("--json", camp.json, "Write the JSON report here ('-' for stdout)");
    campaign_cmd->add_option("--csv", camp.csv, "Write the escape list as CSV here ('-' for stdout)");

    CompareArgs cmp;
    CLI::App *compare_cmd = app.add_subcommand("scheme-compare", "Same-fault comparison of both wrappers");
    add_common(compare_cmd, common);
    compare_cmd->add_option("--pairing", cmp.pairing, "replace or boundary-mask")->required();
    compare_cmd->add_option("--count", cmp.count, "Replacement functions per position");
    compare_cmd->add_option("--seed", cmp.seed, "Seed for replacement sampling");
    compare_cmd->add_option("--positions", cmp.positions, "Comma list of cascade positions (default all)");
    compare_cmd->add_option("--json", cmp.json, "Write the JSON comparison here ('-' for stdout)");

    bool wants_json = false;
    for (const std::string &a : args) {
        wants_json = wants_json || a == "--json" || a.rfind("--json=", 0) == 0;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        print_error(out, err, wants_json, "Usage", e.what());
        return EXIT_USAGE;
    }

    try {
        if (truth->parsed()) {
            return cmd_truth_table(common, json_flag, out);
        }
        if (invert->parsed()) {
            return cmd_invert(common, output, out);
        }
        if (verify->parsed()) {
            return cmd_verify(common, out);
        }
        if (metrics_cmd->parsed()) {
            return cmd_metrics(common, baseline, out);
        }
        if (build->parsed()) {
            return cmd_ced_build(common, scheme, output, out);
        }
        if (campaign_cmd->parsed()) {
            return cmd_campaign(common, camp, out);
        }
        if (compare_cmd->parsed()) {
            return cmd_scheme_compare(common, cmp, out);
        }
    } catch (const ParseError &e) {
        print_error(out, err, wants_json, std::string(error_code_name(e.code())), e.what(),
                    std::pair{e.line(), e.column()});
        return EXIT_USAGE;
    } catch (const Error &e) {
        print_error(out, err, wants_json, std::string(error_code_name(e.code())), e.what());
        return EXIT_USAGE;
    } catch (const UsageError &e) {
        print_error(out, err, wants_json, "Usage", e.what());
        return EXIT_USAGE;
    }
    print_error(out, err, wants_json, "Usage", "no subcommand given");
    return EXIT_USAGE;
}

}  // namespace revced
