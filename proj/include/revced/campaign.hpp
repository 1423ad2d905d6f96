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

#ifndef REVCED_CAMPAIGN_HPP
#define REVCED_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "revced/ced.hpp"
#include "revced/fault.hpp"

namespace revced {

enum class ModelClass { BitFlip, StuckAt, OutputMask, InputMask, GateReplace, MvInputBias, MvStuckAt, MvOutputInvert };

std::string_view model_class_name(ModelClass m);
/// Accepts the class names plus "mv" (all three majority-node models).
std::optional<std::vector<ModelClass>> parse_model_classes(std::string_view text);

struct ModelSet {
    std::set<ModelClass> classes;
    /// Candidate bijections for GateReplace, applied to every instance of
    /// matching width (skipping the instance's own function).
    std::vector<TruthPerm> replacements;
};

/// Regions whose instances host faults. Untagged instances count as R.
using RegionFilter = std::set<Region>;

/// All single faults of the requested classes in the requested regions,
/// ordered by instance id, then location, then model parameters.
/// Throws EmptyRegion if no instance lies in the filter.
std::vector<Fault> enumerate_faults(const CedCircuit &ced, const ModelSet &models, const RegionFilter &regions);

struct SimResult {
    std::vector<bool> golden_out;
    std::vector<bool> faulty_out;
    bool flag = false;
    bool corrupted = false;
};

SimResult simulate(const CedCircuit &ced, const FaultSet &faults, uint64_t input);

struct InputMode {
    bool exhaustive = true;
    size_t count = 0;
    uint64_t seed = 0;

    static InputMode all() {
        return {};
    }
    static InputMode sampled(size_t count, uint64_t seed) {
        return {false, count, seed};
    }
};

/// One silent escape.
struct EscapeRecord {
    size_t fault_id = 0;
    std::string fault;
    std::string input;
    std::string golden;
    std::string faulty;
    bool flag = false;

    bool operator==(const EscapeRecord &) const = default;
};

struct CampaignReport {
    size_t total_faults = 0;
    size_t total_cases = 0;
    size_t corrupting_cases = 0;
    /// Corrupting cases that raised the flag.
    size_t detected_cases = 0;
    size_t silent_escapes = 0;
    /// Flagged cases whose primary outputs were correct.
    size_t false_alarms = 0;
    std::vector<EscapeRecord> escape_list;

    /// detected / corrupting, 1.0 when nothing was corrupted.
    double coverage() const;
    /// silent escapes / corrupting, 0.0 when nothing was corrupted.
    double escape_rate() const;
    size_t flagged_cases() const {
        return detected_cases + false_alarms;
    }

    /// Commutative accumulation of counters; escapes are kept sorted by
    /// (fault id, input) so merge order never shows in the result.
    void merge(const CampaignReport &other);

    bool operator==(const CampaignReport &) const = default;
};

/// Input assignments a campaign visits, in visiting order.
std::vector<uint64_t> campaign_inputs(const Circuit &c, const InputMode &mode);

/// Runs every fault set on every selected input. `threads` = 0 picks the
/// hardware concurrency; results do not depend on it.
CampaignReport campaign(const CedCircuit &ced, const std::vector<FaultSet> &faults, const InputMode &mode,
                        size_t threads = 1);

CampaignReport campaign(const CedCircuit &ced, const ModelSet &models, const RegionFilter &regions,
                        const InputMode &mode, size_t threads = 1);

std::vector<FaultSet> singletons(const std::vector<Fault> &faults);

enum class Pairing { Replace, BoundaryMask };

std::string_view pairing_name(Pairing p);
std::optional<Pairing> parse_pairing(std::string_view text);

struct PairingSpec {
    Pairing kind = Pairing::Replace;
    /// Positions in R's cascade to perturb; empty means all.
    std::vector<size_t> instances;
    size_t replacement_count = 50;
    uint64_t seed = 1;
};

/// Same-fault experiment on both wrappers of R.
///
/// Duplicate scheme: the identical fault hits instance i in both copies.
/// Inverse scheme: gate i of R and its mirror (position k-1-i) in R' receive the
/// same replacement function (Replace), or R's output mask e is paired with an
/// input mask e on the mirror (BoundaryMask).
struct SchemeComparison {
    CampaignReport dup_report;
    CampaignReport inv_report;
    std::vector<FaultSet> dup_faults;
    std::vector<FaultSet> inv_faults;
};

/// Throws BadPairing when a requested position does not exist in R.
SchemeComparison scheme_compare(const Circuit &r, const PairingSpec &pairing, const GateRegistry *registry = nullptr);

/// `count` distinct random bijections of the given width, none equal to
/// `exclude`. Deterministic for a fixed seed.
std::vector<TruthPerm> sample_permutations(size_t width, size_t count, uint64_t seed,
                                           const TruthPerm *exclude = nullptr);

}  // namespace revced

#endif
