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

#include "revced/anf.hpp"

#include "revced/error.hpp"

namespace revced {

void moebius_butterfly(std::vector<bool> &values) {
    size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw Error(ErrorCode::BadLength, "truth vector length " + std::to_string(n) + " is not a power of two");
    }
    for (size_t step = 1; step < n; step <<= 1) {
        for (size_t x = 0; x < n; x++) {
            if (x & step) {
                values[x] = values[x] != values[x ^ step];
            }
        }
    }
}

AnfPoly anf_transform(const std::vector<bool> &truth) {
    std::vector<bool> coeffs = truth;
    moebius_butterfly(coeffs);
    AnfPoly poly;
    poly.vars = std::countr_zero(truth.size());
    if (poly.vars > MAX_EXHAUSTIVE_WIDTH) {
        throw Error(ErrorCode::WidthCap, "ANF over more than 20 variables");
    }
    for (size_t m = 0; m < coeffs.size(); m++) {
        if (coeffs[m]) {
            poly.monomials.insert((uint32_t)m);
        }
    }
    return poly;
}

bool anf_eval(const AnfPoly &poly, const BitWord &x) {
    if (x.width() != poly.vars) {
        throw Error(ErrorCode::WidthMismatch, "ANF over " + std::to_string(poly.vars) +
                                                  " variables evaluated at width " + std::to_string(x.width()));
    }
    bool acc = false;
    for (uint32_t m : poly.monomials) {
        // A product term is 1 iff every selected variable is 1.
        acc ^= (x.value() & m) == m;
    }
    return acc;
}

std::string AnfPoly::str(const std::vector<std::string> &names) const {
    if (monomials.empty()) {
        return "0";
    }
    std::string out;
    for (uint32_t m : monomials) {
        if (!out.empty()) {
            out += " ^ ";
        }
        if (m == 0) {
            out += "1";
            continue;
        }
        for (size_t v = 0; v < vars; v++) {
            if ((m >> v) & 1) {
                out += v < names.size() ? names[v] : "x" + std::to_string(v);
            }
        }
    }
    return out;
}

}  // namespace revced
