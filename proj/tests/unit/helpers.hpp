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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "zakotfs/dd_signal.hpp"
#include "zakotfs/roots.hpp"
#include "zakotfs/twisted.hpp"

namespace zakotfs::test {

inline cplx random_cplx(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(rng), g(rng)};
}

inline DDSignal random_signal(const DDGrid& grid, std::mt19937_64& rng) {
    DDSignal x(grid);
    for (auto& v : x.values()) v = random_cplx(rng);
    return x;
}

inline TapSet random_taps(std::mt19937_64& rng, int count, int k_span, int l_span) {
    std::uniform_int_distribution<int> dk(-k_span, k_span), dl(-l_span, l_span);
    std::vector<Tap> taps;
    for (int i = 0; i < count; ++i) taps.push_back({dk(rng), dl(rng), random_cplx(rng)});
    return TapSet(std::move(taps));
}

inline double max_abs_diff(const DDSignal& a, const DDSignal& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
    return d;
}

inline double max_abs(const DDSignal& a) {
    double d = 0.0;
    for (const auto& v : a.values()) d = std::max(d, std::abs(v));
    return d;
}

/// Largest deviation between a and b after removing the best global phase
/// (estimated at b's largest sample).
inline double phase_aligned_diff(const DDSignal& a, const DDSignal& b) {
    std::size_t im = 0;
    for (std::size_t i = 0; i < b.values().size(); ++i)
        if (std::abs(b.values()[i]) > std::abs(b.values()[im])) im = i;
    cplx r = a.values()[im] / b.values()[im];
    r /= std::abs(r);
    double d = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) d = std::max(d, std::abs(a.values()[i] - r * b.values()[i]));
    return d;
}

/// Plain complex exponential, no tables: e^{j 2 pi num / den}.
inline cplx expj(double num, double den) { return std::polar(1.0, 2.0 * kPi * num / den); }

}  // namespace zakotfs::test
