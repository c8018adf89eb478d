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

#include "zakotfs/zak.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zakotfs/errors.hpp"

namespace zakotfs {

DDSignal zak_transform(const TDSignal& td, const DDGrid& grid) {
    const int M = grid.M(), N = grid.N();
    if (td.oversampling() != 1)
        throw DimensionError("zak_transform: needs a critically sampled frame (Q = 1), got Q = " +
                             std::to_string(td.oversampling()));
    if (td.size() != static_cast<std::size_t>(grid.size()))
        throw DimensionError("zak_transform: expected " + std::to_string(grid.size()) + " samples, got " +
                             std::to_string(td.size()));

    const RootTable xi(N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    const auto x = td.samples();
    DDSignal out(grid);
    for (int k = 0; k < M; ++k) {
        for (int l = 0; l < N; ++l) {
            cplx acc{};
            for (int p = 0; p < N; ++p) acc += x[static_cast<std::size_t>(k + p * M)] * xi(-std::int64_t{p} * l);
            out(k, l) = scale * acc;
        }
    }
    return out;
}

TDSignal inverse_zak_transform(const DDSignal& dd) {
    const DDGrid& grid = dd.grid();
    const int M = grid.M(), N = grid.N();
    const RootTable xi(N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    std::vector<cplx> x(static_cast<std::size_t>(grid.size()));
    for (int k = 0; k < M; ++k) {
        for (int p = 0; p < N; ++p) {
            cplx acc{};
            for (int l = 0; l < N; ++l) acc += dd(k, l) * xi(std::int64_t{p} * l);
            x[static_cast<std::size_t>(k + p * M)] = scale * acc;
        }
    }
    return TDSignal(std::move(x), grid.bandwidth(), 1);
}

double papr_db(const TDSignal& td) {
    double peak = 0.0, total = 0.0;
    for (const auto& s : td.samples()) {
        const double p = std::norm(s);
        peak = std::max(peak, p);
        total += p;
    }
    if (td.size() == 0 || total <= 0.0) throw NumericalError("papr_db: PAPR of a zero signal is undefined");
    const double mean = total / static_cast<double>(td.size());
    return 10.0 * std::log10(peak / mean);
}

}  // namespace zakotfs
