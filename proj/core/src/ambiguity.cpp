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

#include "zakotfs/ambiguity.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/waveforms.hpp"
#include "zakotfs/zak.hpp"

namespace zakotfs {

AmbiguityMap::AmbiguityMap(DDGrid grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
    const auto n = static_cast<std::size_t>(grid_.size());
    if (values_.size() != n * n) throw DimensionError("AmbiguityMap: expected MN x MN values");
}

cplx AmbiguityMap::operator()(long long k, long long l) const {
    const std::int64_t MN = grid_.size();
    return values_[static_cast<std::size_t>(mod(k, MN) * MN + mod(l, MN))];
}

AmbiguityMap cross_ambiguity(const DDSignal& x, const DDSignal& y) {
    if (!(x.grid() == y.grid())) throw DimensionError("cross_ambiguity: grid mismatch");
    const DDGrid& g = x.grid();
    const std::size_t MN = static_cast<std::size_t>(g.size());
    const auto xt = inverse_zak_transform(x);
    const auto yt = inverse_zak_transform(y);
    const auto xs = xt.samples();
    const auto ys = yt.samples();

    // In time, <x, T_{k,l} y> = sum_n x[n] conj(y[n-k]) e^{-j2pi l (n-k)/MN}:
    // one DFT over n per delay k, then the e^{+j2pi lk/MN} correction.
    const detail::Fft fft(MN, -1);
    const RootTable xi(static_cast<std::int64_t>(MN));
    std::vector<cplx> out(MN * MN);
    std::vector<cplx> v(MN);
    for (std::size_t k = 0; k < MN; ++k) {
        for (std::size_t n = 0; n < MN; ++n) v[n] = xs[n] * std::conj(ys[(n + MN - k) % MN]);
        cplx* row = out.data() + k * MN;
        fft(v.data(), row);
        for (std::size_t l = 0; l < MN; ++l)
            row[l] *= xi(static_cast<std::int64_t>((l * k) % MN));
    }
    return AmbiguityMap(g, std::move(out));
}

AmbiguityMap self_ambiguity(const DDSignal& x) { return cross_ambiguity(x, x); }

std::vector<cplx> ambiguity_window(const DDSignal& x, const DDSignal& y, int k_lo, int k_hi, int l_lo,
                                   int l_hi) {
    if (!(x.grid() == y.grid())) throw DimensionError("ambiguity_window: grid mismatch");
    if (k_hi < k_lo || l_hi < l_lo) return {};
    const DDGrid& g = x.grid();
    const int M = g.M(), N = g.N();
    const std::int64_t MN = g.size();
    const RootTable xiN(N), xiMN(MN);
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1) * (l_hi - l_lo + 1));
    const auto yv = y.values();
    for (int k = k_lo; k <= k_hi; ++k) {
        for (int l = l_lo; l <= l_hi; ++l) {
            cplx acc{};
            for (int kp = 0; kp < M; ++kp) {
                const std::int64_t sk = std::int64_t{kp} - k;
                const std::int64_t n = floor_div(sk, M);
                const std::int64_t r = sk - n * M;
                const cplx* yrow = yv.data() + r * N;
                cplx row_acc{};
                for (int lp = 0; lp < N; ++lp) {
                    const std::int64_t lm = mod(std::int64_t{lp} - l, N);
                    cplx yy = yrow[lm];
                    if (n != 0) yy *= xiN(n * lm);
                    row_acc += x(kp, lp) * std::conj(yy);
                }
                acc += row_acc * xiMN(-mul_mod(l, sk, MN));
            }
            out.push_back(acc);
        }
    }
    return out;
}

cplx ambiguity_at(const DDSignal& x, const DDSignal& y, long long k, long long l) {
    const std::int64_t MN = x.grid().size();
    // The ambiguity is MN-periodic in both shifts; reduce to keep int ranges.
    const auto kr = static_cast<int>(mod(k, MN));
    const auto lr = static_cast<int>(mod(l, MN));
    return ambiguity_window(x, y, kr, kr, lr, lr).front();
}

double max_zc_cross_ambiguity(const DDSignal& y, const ZCPilot& z) {
    if (!(y.grid() == z.grid())) throw DimensionError("max_zc_cross_ambiguity: grid mismatch");
    const auto MN = static_cast<std::size_t>(y.grid().size());
    const auto yt = inverse_zak_transform(y);
    const auto zt = inverse_zak_transform(zc_pilot_signal(z));
    std::vector<cplx> w(MN), W(MN);
    for (std::size_t n = 0; n < MN; ++n) w[n] = yt.samples()[n] * std::conj(zt.samples()[n]);
    detail::Fft(MN, -1)(w.data(), W.data());
    double best = 0.0;
    for (const auto& v : W) best = std::max(best, std::abs(v));
    return best;
}

}  // namespace zakotfs
