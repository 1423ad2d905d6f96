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

#include "revced/report.hpp"

#include <sstream>

namespace revced {

nlohmann::json report_to_json(const CampaignReport &report) {
    nlohmann::json escapes = nlohmann::json::array();
    for (const EscapeRecord &e : report.escape_list) {
        escapes.push_back({
            {"fault_id", e.fault_id},
            {"fault", e.fault},
            {"input", e.input},
            {"golden", e.golden},
            {"faulty", e.faulty},
            {"flag", e.flag},
        });
    }
    return {
        {"total_faults", report.total_faults},
        {"total_cases", report.total_cases},
        {"corrupting_cases", report.corrupting_cases},
        {"detected_cases", report.detected_cases},
        {"silent_escapes", report.silent_escapes},
        {"false_alarms", report.false_alarms},
        {"coverage", report.coverage()},
        {"escape_list", escapes},
    };
}

CampaignReport report_from_json(const nlohmann::json &j) {
    CampaignReport r;
    r.total_faults = j.at("total_faults").get<size_t>();
    r.total_cases = j.at("total_cases").get<size_t>();
    r.corrupting_cases = j.at("corrupting_cases").get<size_t>();
    r.detected_cases = j.at("detected_cases").get<size_t>();
    r.silent_escapes = j.at("silent_escapes").get<size_t>();
    r.false_alarms = j.at("false_alarms").get<size_t>();
    for (const auto &e : j.at("escape_list")) {
        r.escape_list.push_back(EscapeRecord{
            e.at("fault_id").get<size_t>(),
            e.at("fault").get<std::string>(),
            e.at("input").get<std::string>(),
            e.at("golden").get<std::string>(),
            e.at("faulty").get<std::string>(),
            e.at("flag").get<bool>(),
        });
    }
    return r;
}

std::string escapes_csv(const CampaignReport &report) {
    std::ostringstream out;
    out << "fault_id,input,golden,faulty,flag\n";
    for (const EscapeRecord &e : report.escape_list) {
        out << e.fault_id << "," << e.input << "," << e.golden << "," << e.faulty << "," << (e.flag ? 1 : 0) << "\n";
    }
    return out.str();
}

nlohmann::json comparison_to_json(const SchemeComparison &cmp, Pairing pairing) {
    auto side = [](const CampaignReport &r) {
        nlohmann::json j = report_to_json(r);
        j["escape_rate"] = r.escape_rate();
        return j;
    };
    return {
        {"pairing", std::string(pairing_name(pairing))},
        {"fault_pairs", cmp.dup_faults.size()},
        {"dup_report", side(cmp.dup_report)},
        {"inv_report", side(cmp.inv_report)},
    };
}

nlohmann::json metrics_to_json(const Metrics &m) {
    nlohmann::json j = {
        {"gate_count", m.gate_count},
        {"garbage_count", m.garbage_count},
        {"delay_levels", m.delay_levels},
    };
    j["quantum_cost"] = m.quantum_cost ? nlohmann::json(*m.quantum_cost) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json truth_table_to_json(const TruthTable &t) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < t.rows; r++) {
        std::string in;
        for (size_t k = 0; k < t.input_wires.size(); k++) {
            in.push_back(((r >> k) & 1) ? '1' : '0');
        }
        std::string out;
        for (size_t k = 0; k < t.output_wires.size(); k++) {
            out.push_back(t.at(r, k) ? '1' : '0');
        }
        rows.push_back({{"input", in}, {"output", out}});
    }
    return {
        {"input_wires", t.input_wires},
        {"output_wires", t.output_wires},
        {"primary_count", t.primary_count},
        {"rows", rows},
    };
}

}  // namespace revced
