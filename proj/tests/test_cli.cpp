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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "revced/cli.hpp"
#include "revced/netlist.hpp"
#include "revced/report.hpp"
#include "test_support.hpp"

using namespace revced;
using namespace revced::testing;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string nl(const std::string &file) {
    return netlist_path(file);
}

std::filesystem::path scratch(const std::string &name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "revced_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(cli, truth_table_text_and_json) {
    CliRun r = run({"truth-table", nl("otg_full_adder.nl"), "otg_adder"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    ASSERT_NE(r.out.find("# inputs: a b cin"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("# outputs: sum cout | p q"), std::string::npos) << r.out;
    // a=1, b=1, cin=1: sum 1, carry 1.
    ASSERT_NE(r.out.find("111 -> 11"), std::string::npos) << r.out;

    CliRun j = run({"truth-table", nl("otg_full_adder.nl"), "otg_adder", "--json"});
    ASSERT_EQ(j.code, EXIT_OK);
    nlohmann::json t = nlohmann::json::parse(j.out);
    ASSERT_EQ(t["rows"].size(), 8u);
    ASSERT_EQ(t["primary_count"], 2);
    ASSERT_EQ(t["rows"][3]["input"], "110");
    ASSERT_EQ(t["rows"][3]["output"].get<std::string>().substr(0, 2), "01");
}

TEST(cli, verify_reports_regeneration) {
    CliRun r = run({"verify", nl("qca1_ced.nl"), "qca1_ced"});
    ASSERT_EQ(r.code, EXIT_OK) << r.out << r.err;
    ASSERT_NE(r.out.find("validate: ok"), std::string::npos);
    ASSERT_NE(r.out.find("reversible: 8/8 distinct output rows"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("regeneration: 8/8 inputs"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("verify: ok"), std::string::npos);

    CliRun adder = run({"verify", nl("otg_adder_ced.nl"), "adder_ced"});
    ASSERT_EQ(adder.code, EXIT_OK) << adder.out;
    ASSERT_NE(adder.out.find("regeneration: 8/8 inputs"), std::string::npos) << adder.out;
}

TEST(cli, verify_fails_on_fanout_in_quantum_mode) {
    std::filesystem::path p = scratch("fanout.nl");
    std::ofstream(p) << "version 1\n"
                        "circuit c mode=quantum\n"
                        "    input a b\n"
                        "    gate FG a b -> p q\n"
                        "    gate NOT p -> x\n"
                        "    gate NOT p -> y\n"
                        "    output q x y\n"
                        "end\n";
    CliRun r = run({"verify", p.string(), "c"});
    ASSERT_EQ(r.code, EXIT_CHECK_FAILED);
    ASSERT_NE(r.out.find("violation"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("verify: failed"), std::string::npos) << r.out;
}

TEST(cli, metrics_with_baseline) {
    CliRun r = run({"metrics", nl("otg_adder_ced.nl"), "adder_ced", "--baseline", "gates=8,garbage=3,delay=8"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["gate_count"], 4);
    ASSERT_EQ(j["garbage_count"], 0);
    ASSERT_EQ(j["delay_levels"], 3);
    ASSERT_EQ(j["quantum_cost"], 14);
    ASSERT_DOUBLE_EQ(j["improvement_percent"]["gate_count"].get<double>(), 50.0);
    ASSERT_DOUBLE_EQ(j["improvement_percent"]["garbage_count"].get<double>(), 100.0);
    ASSERT_DOUBLE_EQ(j["improvement_percent"]["delay_levels"].get<double>(), 62.5);

    CliRun qca = run({"metrics", nl("qca1_ced.nl"), "qca1_ced"});
    ASSERT_TRUE(nlohmann::json::parse(qca.out)["quantum_cost"].is_null());

    CliRun bad = run({"metrics", nl("qca1_ced.nl"), "qca1_ced", "--baseline", "gates=lots"});
    ASSERT_EQ(bad.code, EXIT_USAGE);
}

TEST(cli, campaign_reports_full_coverage) {
    std::filesystem::path json = scratch("report.json");
    std::filesystem::path csv = scratch("escapes.csv");
    CliRun r = run({"campaign", nl("otg_adder_ced.nl"), "adder_ced", "--models", "bitflip,stuckat,outputmask", "--json",
                 json.string(), "--csv", csv.string(), "--threads", "2"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    ASSERT_NE(r.out.find("coverage 1"), std::string::npos) << r.out;
    CampaignReport report = report_from_json(nlohmann::json::parse(read_file(json.string())));
    ASSERT_EQ(report.silent_escapes, 0u);
    ASSERT_GT(report.corrupting_cases, 0u);
    ASSERT_EQ(read_file(csv.string()), "fault_id,input,golden,faulty,flag\n");

    CliRun stdout_json = run({"campaign", nl("qca2_ced.nl"), "qca2_ced", "--models", "mv", "--json", "-"});
    ASSERT_EQ(stdout_json.code, EXIT_OK);
    ASSERT_DOUBLE_EQ(nlohmann::json::parse(stdout_json.out)["coverage"].get<double>(), 1.0);
}

TEST(cli, campaign_with_unprotected_copies_exits_one) {
    CliRun r = run({"campaign", nl("otg_adder_ced.nl"), "adder_ced", "--models", "bitflip", "--include-copy", "--csv",
                 "-"});
    ASSERT_EQ(r.code, EXIT_CHECK_FAILED);
    ASSERT_EQ(r.out.rfind("fault_id,input,golden,faulty,flag\n", 0), 0u) << r.out;
    ASSERT_GT(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST(cli, campaign_wraps_plain_circuits_and_samples_replacements) {
    CliRun r = run({"campaign", nl("otg_full_adder.nl"), "otg_adder", "--models", "replace", "--replacements", "10",
                 "--json", "-"});
    nlohmann::json j = nlohmann::json::parse(r.out);
    // OTG and IOTG receive 10 sampled 4-wire functions each; FG copies are excluded.
    ASSERT_EQ(j["total_faults"], 20);
    ASSERT_EQ(j["total_cases"], 160);
    ASSERT_EQ(r.code, j["silent_escapes"] == 0 ? EXIT_OK : EXIT_CHECK_FAILED);
}

TEST(cli, usage_and_library_errors_exit_two) {
    ASSERT_EQ(run({}).code, EXIT_USAGE);
    ASSERT_EQ(run({"frobnicate"}).code, EXIT_USAGE);
    ASSERT_EQ(run({"campaign", nl("qca1_ced.nl"), "qca1_ced"}).code, EXIT_USAGE);
    ASSERT_EQ(run({"campaign", nl("qca1_ced.nl"), "qca1_ced", "--models", "cosmic"}).code, EXIT_USAGE);
    ASSERT_EQ(run({"campaign", nl("qca1_ced.nl"), "qca1_ced", "--models", "bitflip", "--region", "Rdup"}).code,
              EXIT_USAGE);
    ASSERT_EQ(run({"verify", "/nonexistent/file.nl", "c"}).code, EXIT_USAGE);
    ASSERT_EQ(run({"verify", nl("qca1_ced.nl"), "nope"}).code, EXIT_USAGE);
    ASSERT_EQ(run({"scheme-compare", nl("otg_full_adder.nl"), "otg_adder", "--pairing", "sideways"}).code, EXIT_USAGE);
    ASSERT_EQ(run({"scheme-compare", nl("otg_full_adder.nl"), "otg_adder", "--pairing", "replace", "--positions", "4"})
                  .code,
              EXIT_USAGE);
}

TEST(cli, parse_errors_as_json) {
    std::filesystem::path p = scratch("broken.nl");
    std::ofstream(p) << "version 1\ncircuit c mode=quantum\n    input a\n    gate NOPE a -> b\nend\n";
    CliRun r = run({"truth-table", p.string(), "c", "--json"});
    ASSERT_EQ(r.code, EXIT_USAGE);
    nlohmann::json j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["error"]["code"], "UnknownGate");
    ASSERT_EQ(j["error"]["line"], 4);
    ASSERT_EQ(j["error"]["column"], 10);
    ASSERT_NE(r.err.find("unknown gate NOPE"), std::string::npos) << r.err;
}

TEST(cli, ced_build_round_trips_through_the_parser) {
    for (const char *scheme : {"inverse", "duplicate"}) {
        std::filesystem::path p = scratch(std::string("built_") + scheme + ".nl");
        CliRun r = run({"ced", "build", nl("otg_full_adder.nl"), "otg_adder", "--scheme", scheme, "-o", p.string()});
        ASSERT_EQ(r.code, EXIT_OK) << r.err;
        std::string text = read_file(p.string());
        NetlistDocument doc = parse_netlist(text);
        ASSERT_EQ(emit_netlist(doc), text);
        ASSERT_TRUE(doc.circuits[0].compare.has_value());
        CliRun v = run({"verify", p.string(), doc.circuits[0].circuit.name});
        ASSERT_EQ(v.code, EXIT_OK) << v.out;
    }
}

TEST(cli, invert_emits_the_inverse_circuit) {
    std::filesystem::path src = scratch("otg_only.nl");
    std::ofstream(src) << "version 1\ncircuit g mode=quantum\n    input a b c d\n"
                          "    gate OTG a b c d -> p q r s\n    output p q r s\nend\n";
    CliRun r = run({"invert", src.string(), "g"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    NetlistDocument doc = parse_netlist(r.out);
    const Circuit &inv = doc.circuits[0].circuit;
    ASSERT_EQ(inv.instances[0].gate->name, "IOTG");
    for (uint32_t y = 0; y < 16; y++) {
        ASSERT_EQ(BitWord(oracle_outputs(inv, y)).value(), builtin_gates().lookup("IOTG").perm(y));
    }
}

TEST(cli, scheme_compare_json) {
    CliRun r = run({"scheme-compare", nl("otg_full_adder.nl"), "otg_adder", "--pairing", "replace", "--count", "50",
                 "--seed", "1", "--json", "-"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["pairing"], "replace");
    ASSERT_EQ(j["fault_pairs"], 50);
    ASSERT_DOUBLE_EQ(j["dup_report"]["escape_rate"].get<double>(), 1.0);
    ASSERT_LT(j["inv_report"]["escape_rate"].get<double>(), 1.0);

    CliRun text = run({"scheme-compare", nl("otg_full_adder.nl"), "otg_adder", "--pairing", "boundary-mask"});
    ASSERT_EQ(text.code, EXIT_OK);
    ASSERT_NE(text.out.find("inverse: corrupting 96, silent escapes 96"), std::string::npos) << text.out;
}
