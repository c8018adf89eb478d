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

#include "zakotfs/waveforms.hpp"

#include <cmath>
#include <string>

#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/pulse.hpp"
#include "zakotfs/zak.hpp"

namespace zakotfs {

PointPilot::PointPilot(DDGrid g, int k, int l, double e) : grid(g), k_p(k), l_p(l), energy(e) {
    if (k < 0 || k >= g.M() || l < 0 || l >= g.N())
        throw ConstructionError("PointPilot: location (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") outside the fundamental region");
    if (!(e >= 0.0)) throw ConstructionError("PointPilot: energy must be nonnegative");
}

ChirpPilot::ChirpPilot(DDGrid grid, std::int64_t q) : grid_(grid), q_(q) {
    grid_.require_odd_coprime();
    const std::int64_t M = grid_.M(), N = grid_.N();
    if (gcd(q, M) != 1 || gcd(q, N) != 1)
        throw ConstructionError("ChirpPilot: slope " + std::to_string(q) + " must be coprime to M and N");
    // CRT split; exact equality q = aM + bN only holds modulo MN.
    a_ = mul_mod(q, *mod_inverse(M, N), N);
    b_ = mul_mod(q, *mod_inverse(N, M), M);
}

ZCPilot::ZCPilot(DDGrid grid, std::int64_t u) : grid_(grid), u_(u) {
    grid_.require_odd_coprime();
    if (gcd(u, grid_.size()) != 1)
        throw ConstructionError("ZCPilot: root " + std::to_string(u) + " must be coprime to MN = " +
                                std::to_string(grid_.size()));
}

std::vector<cplx> ZCPilot::sequence() const { return zc_sequence(u_, grid_.size()); }

std::vector<cplx> zc_sequence(std::int64_t u, std::int64_t L) {
    if (L < 1) throw ConstructionError("zc_sequence: length must be positive");
    std::vector<cplx> z(static_cast<std::size_t>(L));
    const RootTable xi(L);
    for (std::int64_t n = 0; n < L; ++n) {
        // n(n+1)/2 is an integer; reduce before the product to stay exact.
        const std::int64_t tri = mod((n % 2 == 0) ? mul_mod(n / 2, n + 1, L) : mul_mod(n, (n + 1) / 2, L), L);
        z[static_cast<std::size_t>(n)] = xi(-mul_mod(u, tri, L));
    }
    return z;
}

DDSignal point_pilot_signal(const PointPilot& p) {
    DDSignal x(p.grid);
    x(p.k_p, p.l_p) = std::sqrt(p.energy);
    return x;
}

DDSignal chirp_pilot_signal(const ChirpPilot& c) {
    const DDGrid& g = c.grid();
    const std::int64_t M = g.M(), N = g.N();
    const auto inv = mod_inverse(mul_mod(4 * c.a(), M, N), N);
    if (!inv) throw ConstructionError("chirp_pilot_signal: 4aM is not invertible mod N");
    // The closed form holds for one particular pair of primitive roots:
    // xi_N -> xi_N^{1/M} and xi_M -> xi_M^{-1/N} in our fixed convention.
    // With those it equals w_q *sigma delta exactly, up to a global phase.
    const std::int64_t rN = *mod_inverse(M, N);
    const std::int64_t rM = mod(-*mod_inverse(N, M), M);
    const RootTable xiN(N), xiM(M);
    const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
    DDSignal x(g);
    for (std::int64_t k = 0; k < M; ++k) {
        const std::int64_t eM = mod(-mul_mod(mul_mod(c.b(), N, M), k * k, M), M);
        const cplx fk = xiM(mul_mod(rM, eM, M));
        for (std::int64_t l = 0; l < N; ++l) {
            const std::int64_t l2 = mod(l * l, N);
            const std::int64_t eN = mul_mod(c.a() * M, l2, N) - mul_mod(l2, *inv, N) + mul_mod(k, l, N);
            x(static_cast<int>(k), static_cast<int>(l)) = scale * fk * xiN(mul_mod(rN, eN, N));
        }
    }
    return x;
}

DDSignal zc_pilot_signal(const ZCPilot& z) {
    const DDGrid& g = z.grid();
    const std::int64_t M = g.M(), N = g.N(), MN = g.size();
    const std::int64_t u = z.root();
    const auto inv = mod_inverse(mul_mod(8 * mod(u, N), M, N), N);
    if (!inv) throw ConstructionError("zc_pilot_signal: 8uM is not invertible mod N");
    const RootTable xiN(N), xiMN(MN);
    const double scale = 1.0 / std::sqrt(static_cast<double>(MN));
    DDSignal x(g);
    for (std::int64_t k = 0; k < M; ++k) {
        const std::int64_t tri = k * (k + 1) / 2;
        const cplx fk = xiMN(-mul_mod(u, tri, MN));
        for (std::int64_t l = 0; l < N; ++l) {
            const std::int64_t base = mod(mul_mod(u, 2 * k + 1, N) + 2 * l, N);
            const std::int64_t e = mul_mod(mul_mod(base, base, N), *inv, N);
            x(static_cast<int>(k), static_cast<int>(l)) = scale * fk * xiN(e);
        }
    }
    return x;
}

DDSignal zc_signal_from_sequence(std::int64_t u, const DDGrid& grid) {
    auto seq = zc_sequence(u, grid.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.size()));
    for (auto& v : seq) v *= scale;
    return zak_transform(TDSignal(std::move(seq), grid.bandwidth()), grid);
}

double gauss_sum_magnitude(std::int64_t N, std::int64_t a) {
    if (N < 1 || N % 2 == 0) throw PreconditionError("gauss_sum_magnitude: N must be odd and positive");
    if (gcd(a, N) != 1) throw PreconditionError("gauss_sum_magnitude: a must be coprime to N");
    const RootTable xi(N);
    cplx s{};
    for (std::int64_t p = 0; p < N; ++p) s += xi(mul_mod(a, p * p, N));
    return std::abs(s);
}

DDSignal data_frame_signal(std::span<const cplx> symbols, const DDGrid& grid) {
    if (symbols.size() != static_cast<std::size_t>(grid.size()))
        throw DimensionError("data_frame_signal: expected " + std::to_string(grid.size()) + " symbols, got " +
                             std::to_string(symbols.size()));
    return DDSignal(grid, std::vector<cplx>(symbols.begin(), symbols.end()));
}

TDSignal oversampled_realization(const DDSignal& x, int Q, double beta_tau) {
    if (Q < 1) throw PreconditionError("oversampled_realization: Q must be >= 1");
    const TDSignal crit = inverse_zak_transform(x);
    const auto s = crit.samples();
    const long L = static_cast<long>(s.size());
    const double W = rrc_truncation(beta_tau);
    const long span = static_cast<long>(std::ceil(W)) + 1;
    std::vector<cplx> out(static_cast<std::size_t>(Q * L));
    for (long m = 0; m < Q * L; ++m) {
        const double t = static_cast<double>(m) / Q;
        const long centre = m / Q;
        cplx acc{};
        for (long n = centre - span; n <= centre + span + 1; ++n) {
            const double d = t - static_cast<double>(n);
            if (std::abs(d) > W) continue;
            acc += s[static_cast<std::size_t>(mod(n, L))] * rrc(d, beta_tau);
        }
        out[static_cast<std::size_t>(m)] = acc;
    }
    return TDSignal(std::move(out), crit.sample_rate() * Q, Q);
}

}  // namespace zakotfs
