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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zakotfs {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Table of the K-th roots of unity xi_K^e = exp(+j 2 pi e / K).
///
/// Exponents are reduced modulo K before lookup, so integer exponent
/// arithmetic never loses precision even for K ~ 10^6.
class RootTable {
public:
    explicit RootTable(std::int64_t order);

    std::int64_t order() const { return order_; }

    cplx operator()(std::int64_t exponent) const;

private:
    std::int64_t order_;
    std::vector<cplx> table_;
};

/// exp(+j 2 pi e / K) for a single exponent (no table).
cplx root_of_unity(std::int64_t exponent, std::int64_t order);

}  // namespace zakotfs
