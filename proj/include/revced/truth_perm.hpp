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

#ifndef REVCED_TRUTH_PERM_HPP
#define REVCED_TRUTH_PERM_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "revced/bitword.hpp"

namespace revced {

/// A bijection on {0, ..., 2^n - 1}: the function of an n-wire reversible gate.
class TruthPerm {
   public:
    /// Throws NonBijective if the table is not a permutation, WidthCap if n > 20.
    TruthPerm(size_t width, std::vector<uint32_t> table);

    static TruthPerm identity(size_t width);

    /// Builds a permutation from explicit (input, output) rows.
    ///
    /// Throws MissingRow unless exactly 2^n distinct inputs are given and
    /// DuplicateOutput when two inputs share an output.
    static TruthPerm from_rows(std::span<const std::pair<BitWord, BitWord>> rows);

    size_t width() const {
        return width_;
    }
    size_t size() const {
        return table_.size();
    }
    const std::vector<uint32_t> &table() const {
        return table_;
    }
    uint32_t operator()(uint32_t input) const {
        return table_[input];
    }
    BitWord apply(const BitWord &input) const;

    bool is_identity() const;
    bool operator==(const TruthPerm &other) const = default;

   private:
    size_t width_;
    std::vector<uint32_t> table_;
};

TruthPerm perm_invert(const TruthPerm &p);

/// Cascade: `first` is applied, then `second`.
TruthPerm perm_compose(const TruthPerm &first, const TruthPerm &second);

}  // namespace revced

#endif
