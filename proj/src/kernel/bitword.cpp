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

#include "revced/bitword.hpp"

#include "revced/error.hpp"

namespace revced {

namespace {

void check_width(size_t width) {
    if (width == 0 || width > MAX_EXHAUSTIVE_WIDTH) {
        throw Error(
            ErrorCode::WidthCap,
            "bit word width " + std::to_string(width) + " outside 1.." + std::to_string(MAX_EXHAUSTIVE_WIDTH));
    }
}

}  // namespace

BitWord::BitWord(size_t width, uint32_t value) : width_(width), value_(value) {
    check_width(width);
    if (value >> width) {
        throw Error(ErrorCode::WidthMismatch, "value " + std::to_string(value) + " does not fit in " +
                                                   std::to_string(width) + " bits");
    }
}

BitWord::BitWord(const std::vector<bool> &bits) : width_(bits.size()), value_(0) {
    check_width(width_);
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k]) {
            value_ |= uint32_t{1} << k;
        }
    }
}

BitWord BitWord::from_string(std::string_view text) {
    std::vector<bool> bits;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::Syntax, "bit word text must contain only 0 and 1: '" + std::string(text) + "'");
        }
        bits.push_back(c == '1');
    }
    return BitWord(bits);
}

bool BitWord::operator[](size_t index) const {
    return (value_ >> index) & 1;
}

BitWord BitWord::with_bit(size_t index, bool bit) const {
    if (index >= width_) {
        throw Error(ErrorCode::WidthMismatch, "bit index out of range");
    }
    uint32_t v = bit ? (value_ | (uint32_t{1} << index)) : (value_ & ~(uint32_t{1} << index));
    return BitWord(width_, v);
}

BitWord BitWord::operator^(const BitWord &other) const {
    if (width_ != other.width_) {
        throw Error(ErrorCode::WidthMismatch, "xor of bit words with widths " + std::to_string(width_) + " and " +
                                                   std::to_string(other.width_));
    }
    return BitWord(width_, value_ ^ other.value_);
}

std::vector<bool> BitWord::bits() const {
    std::vector<bool> out(width_);
    for (size_t k = 0; k < width_; k++) {
        out[k] = (*this)[k];
    }
    return out;
}

std::string BitWord::str() const {
    std::string out;
    out.reserve(width_);
    for (size_t k = 0; k < width_; k++) {
        out.push_back((*this)[k] ? '1' : '0');
    }
    return out;
}

}  // namespace revced
