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

#include "zakotfs/grid.hpp"

#include <cmath>
#include <string>

#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"

namespace zakotfs {

DDGrid::DDGrid(int M, int N, double doppler_period_hz) : M_(M), N_(N), nu_p_(doppler_period_hz) {
    if (M < 1 || N < 1)
        throw ConstructionError("DDGrid: M and N must be positive (got " + std::to_string(M) + ", " +
                                std::to_string(N) + ")");
    if (!(doppler_period_hz > 0.0) || !std::isfinite(doppler_period_hz))
        throw ConstructionError("DDGrid: Doppler period must be positive and finite");
}

bool DDGrid::odd_coprime() const { return (M_ % 2 == 1) && (N_ % 2 == 1) && gcd(M_, N_) == 1; }

void DDGrid::require_odd_coprime() const {
    if (!odd_coprime())
        throw PreconditionError("grid " + std::to_string(M_) + "x" + std::to_string(N_) +
                                " must have odd, coprime M and N");
}

}  // namespace zakotfs
