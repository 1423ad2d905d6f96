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

#ifndef REVCED_ANF_HPP
#define REVCED_ANF_HPP

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "revced/bitword.hpp"

namespace revced {

/// XOR-of-products polynomial over GF(2).
///
/// A monomial is the bitmask of the variables it multiplies; mask 0 is the
/// constant 1. A monomial is present iff its coefficient is 1.
struct AnfPoly {
    size_t vars = 0;
    std::set<uint32_t> monomials;

    bool operator==(const AnfPoly &other) const = default;

    /// Renders e.g. "x0x1 ^ x2" using the given variable names (defaults to x<i>).
    std::string str(const std::vector<std::string> &names = {}) const;
};

/// Moebius transform of a truth vector of length 2^n.
AnfPoly anf_transform(const std::vector<bool> &truth);

/// In-place butterfly; applying it twice restores the input.
void moebius_butterfly(std::vector<bool> &values);

bool anf_eval(const AnfPoly &poly, const BitWord &x);

inline int monomial_degree(uint32_t monomial) {
    return std::popcount(monomial);
}

}  // namespace revced

#endif
