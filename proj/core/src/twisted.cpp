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

#include "zakotfs/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"

namespace zakotfs {

TapSet::TapSet(std::vector<Tap> taps) {
    std::stable_sort(taps.begin(), taps.end(),
                     [](const Tap& a, const Tap& b) { return std::pair(a.k, a.l) < std::pair(b.k, b.l); });
    for (const auto& t : taps) {
        if (!taps_.empty() && taps_.back().k == t.k && taps_.back().l == t.l)
            taps_.back().value += t.value;
        else
            taps_.push_back(t);
    }
}

cplx TapSet::value(int k, int l) const {
    auto it = std::lower_bound(taps_.begin(), taps_.end(), std::pair(k, l),
                               [](const Tap& t, const std::pair<int, int>& key) { return std::pair(t.k, t.l) < key; });
    if (it != taps_.end() && it->k == k && it->l == l) return it->value;
    return {};
}

double TapSet::energy() const {
    double e = 0.0;
    for (const auto& t : taps_) e += std::norm(t.value);
    return e;
}

TapSet TapSet::pruned(double threshold) const {
    std::vector<Tap> kept;
    for (const auto& t : taps_)
        if (std::abs(t.value) >= threshold) kept.push_back(t);
    return TapSet(std::move(kept));
}

DDSignal twisted_convolve(const TapSet& a, const DDSignal& b) {
    const DDGrid& grid = b.grid();
    const int M = grid.M(), N = grid.N();
    const std::int64_t MN = grid.size();
    const RootTable xiN(N), xiMN(MN);
    DDSignal y(grid);
    const auto src = b.values();

    for (const auto& tap : a) {
        for (int k = 0; k < M; ++k) {
            const std::int64_t sk = std::int64_t{k} - tap.k;
            const std::int64_t n = floor_div(sk, M);
            const std::int64_t r = sk - n * M;
            const cplx twist = tap.value * xiMN(mul_mod(tap.l, sk, MN));
            const cplx* row = src.data() + r * N;
            for (int l = 0; l < N; ++l) {
                const std::int64_t lm = mod(std::int64_t{l} - tap.l, N);
                cplx v = row[lm];
                if (n != 0) v *= xiN(n * lm);
                y(k, l) += twist * v;
            }
        }
    }
    return y;
}

TapSet twisted_convolve(const TapSet& a, const TapSet& b, const DDGrid& grid) {
    const std::int64_t MN = grid.size();
    const RootTable xi(MN);
    std::map<std::pair<int, int>, cplx> acc;
    for (const auto& ta : a)
        for (const auto& tb : b)
            acc[{ta.k + tb.k, ta.l + tb.l}] += ta.value * tb.value * xi(mul_mod(ta.l, tb.k, MN));
    std::vector<Tap> out;
    out.reserve(acc.size());
    for (const auto& [pos, v] : acc) out.push_back(Tap{pos.first, pos.second, v});
    return TapSet(std::move(out));
}

TapSet add(const TapSet& a, const TapSet& b, cplx s) {
    std::vector<Tap> all(a.begin(), a.end());
    for (const auto& t : b) all.push_back(Tap{t.k, t.l, s * t.value});
    return TapSet(std::move(all));
}

}  // namespace zakotfs
