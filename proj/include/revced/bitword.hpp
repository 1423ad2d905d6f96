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

#ifndef REVCED_BITWORD_HPP
#define REVCED_BITWORD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revced {

/// Largest wire count for which exhaustive tables are built.
constexpr size_t MAX_EXHAUSTIVE_WIDTH = 20;

/// Fixed-width vector of wire values.
///
/// Bit index 0 is the first-listed wire and is the least significant bit of the
/// integer encoding. The text form lists wires in declaration order, so the
/// leftmost character is bit 0.
class BitWord {
   public:
    BitWord(size_t width, uint32_t value);
    explicit BitWord(const std::vector<bool> &bits);

    /// Parses a wire-order string such as "1001" (bit 0 = leftmost character).
    static BitWord from_string(std::string_view text);

    size_t width() const {
        return width_;
    }
    uint32_t value() const {
        return value_;
    }
    bool operator[](size_t index) const;
    BitWord with_bit(size_t index, bool bit) const;

    BitWord operator^(const BitWord &other) const;
    bool operator==(const BitWord &other) const = default;

    bool any() const {
        return value_ != 0;
    }
    std::vector<bool> bits() const;
    std::string str() const;

   private:
    size_t width_;
    uint32_t value_;
};

}  // namespace revced

#endif
