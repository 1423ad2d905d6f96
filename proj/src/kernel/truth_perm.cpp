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

#include "revced/truth_perm.hpp"

#include <algorithm>

#include "revced/error.hpp"

namespace revced {

TruthPerm::TruthPerm(size_t width, std::vector<uint32_t> table) : width_(width), table_(std::move(table)) {
    if (width == 0 || width > MAX_EXHAUSTIVE_WIDTH) {
        throw Error(ErrorCode::WidthCap, "permutation width " + std::to_string(width) + " outside 1.." +
                                             std::to_string(MAX_EXHAUSTIVE_WIDTH));
    }
    size_t n = size_t{1} << width;
    if (table_.size() != n) {
        throw Error(ErrorCode::BadLength, "permutation of width " + std::to_string(width) + " needs " +
                                              std::to_string(n) + " entries, got " + std::to_string(table_.size()));
    }
    std::vector<bool> seen(n, false);
    for (size_t k = 0; k < n; k++) {
        uint32_t v = table_[k];
        if (v >= n) {
            throw Error(ErrorCode::NonBijective, "permutation entry " + std::to_string(v) + " out of range");
        }
        if (seen[v]) {
            throw Error(ErrorCode::NonBijective, "permutation maps two inputs to " + std::to_string(v));
        }
        seen[v] = true;
    }
}

TruthPerm TruthPerm::identity(size_t width) {
    std::vector<uint32_t> table(size_t{1} << width);
    for (size_t k = 0; k < table.size(); k++) {
        table[k] = (uint32_t)k;
    }
    return TruthPerm(width, std::move(table));
}

TruthPerm TruthPerm::from_rows(std::span<const std::pair<BitWord, BitWord>> rows) {
    if (rows.empty()) {
        throw Error(ErrorCode::MissingRow, "truth table has no rows");
    }
    size_t width = rows.front().first.width();
    size_t n = size_t{1} << width;
    std::vector<uint32_t> table(n);
    std::vector<bool> have_input(n, false);
    std::vector<bool> have_output(n, false);
    for (const auto &[in, out] : rows) {
        if (in.width() != width || out.width() != width) {
            throw Error(ErrorCode::WidthMismatch, "truth table rows have inconsistent widths");
        }
        if (have_input[in.value()]) {
            throw Error(ErrorCode::MissingRow, "input " + in.str() + " listed twice");
        }
        if (have_output[out.value()]) {
            throw Error(ErrorCode::DuplicateOutput, "output " + out.str() + " produced by two inputs");
        }
        have_input[in.value()] = true;
        have_output[out.value()] = true;
        table[in.value()] = out.value();
    }
    if (rows.size() != n) {
        throw Error(ErrorCode::MissingRow, "truth table of width " + std::to_string(width) + " needs " +
                                               std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    }
    return TruthPerm(width, std::move(table));
}

BitWord TruthPerm::apply(const BitWord &input) const {
    if (input.width() != width_) {
        throw Error(ErrorCode::WidthMismatch, "input width " + std::to_string(input.width()) +
                                                  " does not match permutation width " + std::to_string(width_));
    }
    return BitWord(width_, table_[input.value()]);
}

bool TruthPerm::is_identity() const {
    for (size_t k = 0; k < table_.size(); k++) {
        if (table_[k] != k) {
            return false;
        }
    }
    return true;
}

TruthPerm perm_invert(const TruthPerm &p) {
    std::vector<uint32_t> inverse(p.size());
    for (size_t k = 0; k < p.size(); k++) {
        inverse[p(k)] = (uint32_t)k;
    }
    return TruthPerm(p.width(), std::move(inverse));
}

TruthPerm perm_compose(const TruthPerm &first, const TruthPerm &second) {
    if (first.width() != second.width()) {
        throw Error(ErrorCode::WidthMismatch, "cannot compose permutations of widths " +
                                                  std::to_string(first.width()) + " and " +
                                                  std::to_string(second.width()));
    }
    std::vector<uint32_t> table(first.size());
    for (size_t k = 0; k < table.size(); k++) {
        table[k] = second(first(k));
    }
    return TruthPerm(first.width(), std::move(table));
}

}  // namespace revced
