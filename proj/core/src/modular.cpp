// SPDX-License-Identifier: Apache-2.0
//
// zakotfs - delay-Doppler signal processing with Zadoff-Chu spread pilots
// Copyright (C) 2026 The zakotfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "zakotfs/modular.hpp"

#include <cmath>
#include <cstdlib>

#include "zakotfs/roots.hpp"

namespace zakotfs {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
    if (m <= 0) return std::nullopt;
    if (m == 1) return 0;
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return std::nullopt;
    return mod(old_s, m);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    __extension__ using wide = __int128;
    const wide p = static_cast<wide>(mod(a, m)) * static_cast<wide>(mod(b, m));
    return static_cast<std::int64_t>(p % m);
}

RootTable::RootTable(std::int64_t order) : order_(order), table_(static_cast<std::size_t>(order)) {
    for (std::int64_t e = 0; e < order; ++e) table_[static_cast<std::size_t>(e)] = root_of_unity(e, order);
}

cplx RootTable::operator()(std::int64_t exponent) const {
    return table_[static_cast<std::size_t>(mod(exponent, order_))];
}

cplx root_of_unity(std::int64_t exponent, std::int64_t order) {
    const std::int64_t e = mod(exponent, order);
    const double angle = 2.0 * kPi * static_cast<double>(e) / static_cast<double>(order);
    return std::polar(1.0, angle);
}

}  // namespace zakotfs
