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

#ifndef REVCED_REPORT_HPP
#define REVCED_REPORT_HPP

#include <string>

#include "json.hpp"
#include "revced/campaign.hpp"
#include "revced/circuit.hpp"

namespace revced {

/// Campaign counters plus coverage and the escape list; field names match
/// CampaignReport.
nlohmann::json report_to_json(const CampaignReport &report);
CampaignReport report_from_json(const nlohmann::json &j);

/// One line per silent escape under the header `fault_id,input,golden,faulty,flag`.
std::string escapes_csv(const CampaignReport &report);

nlohmann::json comparison_to_json(const SchemeComparison &cmp, Pairing pairing);

/// Metrics as JSON; an unknown quantum cost serializes as null.
nlohmann::json metrics_to_json(const Metrics &m);

nlohmann::json truth_table_to_json(const TruthTable &t);

}  // namespace revced

#endif
