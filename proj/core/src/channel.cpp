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

#include "zakotfs/channel.hpp"

#include <cmath>
#include <string>

#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/pulse.hpp"

namespace zakotfs {

const std::vector<double>& VehA::delays() {
    static const std::vector<double> d{0.0, 0.31e-6, 0.71e-6, 1.09e-6, 1.73e-6, 2.51e-6};
    return d;
}

const std::vector<double>& VehA::powers() {
    static const std::vector<double> p = [] {
        const double db[] = {0.0, -1.0, -9.0, -10.0, -15.0, -20.0};
        std::vector<double> lin;
        double sum = 0.0;
        for (double v : db) {
            lin.push_back(std::pow(10.0, v / 10.0));
            sum += lin.back();
        }
        for (auto& v : lin) v /= sum;
        return lin;
    }();
    return p;
}

PhysicalChannel draw_veh_a(std::uint64_t seed, double nu_max, double delay_jitter) {
    if (!(nu_max >= 0.0)) throw PreconditionError("draw_veh_a: nu_max must be nonnegative");
    if (!(delay_jitter >= 0.0)) throw PreconditionError("draw_veh_a: delay jitter must be nonnegative");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PhysicalChannel ch;
    ch.nu_max = nu_max;
    for (int i = 0; i < VehA::kPaths; ++i) {
        const double sd = std::sqrt(VehA::powers()[i] / 2.0);
        const double re = gauss(rng), im = gauss(rng);
        const double theta = 2.0 * kPi * unit(rng);
        double delay = VehA::delays()[i];
        if (delay_jitter > 0.0) delay += delay_jitter * unit(rng);
        ch.paths.push_back(ChannelPath{cplx{sd * re, sd * im}, delay, nu_max * std::cos(theta)});
        ch.tau_max = std::max(ch.tau_max, delay);
    }
    return ch;
}

namespace {

// Ceiling that forgives representation error in products like 31 * 2.51e-6 * 3e4.
int snapped_ceil(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<int>(r);
    return static_cast<int>(std::ceil(x));
}

bool near_integer(double x, long& out) {
    const double r = std::round(x);
    out = static_cast<long>(r);
    return std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x));
}

}  // namespace

Crystallization check_crystallization(const DDGrid& grid, double tau_max, double nu_max) {
    const int k_max = snapped_ceil(grid.M() * tau_max * grid.doppler_period());
    const int l_max = snapped_ceil(2.0 * grid.N() * nu_max / grid.doppler_period());
    return {k_max, l_max, k_max < grid.M() && l_max < grid.N()};
}

EffectiveChannel effective_channel(const PhysicalChannel& phy, const PulseShapingFilter& filt, const DDGrid& grid,
                                   int k_margin, int l_margin) {
    const auto cr = check_crystallization(grid, phy.tau_max, phy.nu_max);
    EffectiveChannel eff;
    eff.k_max = cr.k_max;
    eff.l_max = cr.l_max;
    eff.k_margin = k_margin;
    eff.l_margin = l_margin;
    if (phy.paths.empty()) return eff;

    const double B = grid.bandwidth(), T = grid.duration();
    const double MN = grid.size();

    if (filt.kind == PulseShapingFilter::Kind::Ideal) {
        std::vector<Tap> taps;
        for (const auto& p : phy.paths) {
            long k = 0, l = 0;
            if (!near_integer(p.delay * B, k) || !near_integer(p.doppler * T, l))
                throw PreconditionError("effective_channel: the ideal filter needs on-grid paths");
            taps.push_back(Tap{static_cast<int>(k), static_cast<int>(l), p.gain});
        }
        eff.taps = TapSet(std::move(taps));
        return eff;
    }

    const int k_lo = -k_margin, k_hi = cr.k_max + k_margin;
    const int l_lo = -cr.l_max - l_margin, l_hi = cr.l_max + l_margin;
    const int os = filt.oversample;
    const double h = 1.0 / os;
    const double Wt = rrc_truncation(filt.beta_tau, filt.truncation);
    const double Wn = rrc_truncation(filt.beta_nu, filt.truncation);
    const long Jt = static_cast<long>(std::floor(Wt * os));
    const long Jn = static_cast<long>(std::floor(Wn * os));

    auto gt = [&](double t) { return std::abs(t) > Wt ? 0.0 : rrc(t, filt.beta_tau); };
    auto gn = [&](double t) { return std::abs(t) > Wn ? 0.0 : rrc(t, filt.beta_nu); };

    std::vector<double> g0t(2 * Jt + 1), g0n(2 * Jn + 1);
    for (long j = -Jt; j <= Jt; ++j) g0t[j + Jt] = gt(j * h);
    for (long j = -Jn; j <= Jn; ++j) g0n[j + Jn] = gn(j * h);

    // e^{+j 2 pi (k / MN) x_j}, shared by every path.
    const int nk = k_hi - k_lo + 1, nl = l_hi - l_lo + 1;
    std::vector<std::vector<cplx>> doppler_phase(nk, std::vector<cplx>(2 * Jn + 1));
    for (int k = k_lo; k <= k_hi; ++k)
        for (long j = -Jn; j <= Jn; ++j)
            doppler_phase[k - k_lo][j + Jn] = std::polar(1.0, 2.0 * kPi * k * (j * h) / MN);

    std::vector<cplx> acc(static_cast<std::size_t>(nk) * nl);
    const long m_lo = static_cast<long>(l_lo) * os - Jn, m_hi = static_cast<long>(l_hi) * os + Jn;
    std::vector<double> G(m_hi - m_lo + 1);

    for (const auto& p : phy.paths) {
        const double kap = p.delay * B;
        const double lam = p.doppler * T;

        std::vector<cplx> delay_part(nk);
        for (int k = k_lo; k <= k_hi; ++k) {
            cplx s{};
            for (long j = -Jt; j <= Jt; ++j) {
                const double g1 = g0t[j + Jt];
                if (g1 == 0.0) continue;
                const double g2 = gt(k - kap - j * h);
                if (g2 == 0.0) continue;
                s += g1 * g2 * std::polar(1.0, -2.0 * kPi * (lam / MN) * (j * h));
            }
            delay_part[k - k_lo] = s * h * std::polar(1.0, 2.0 * kPi * lam * (k - kap) / MN);
        }

        for (long m = m_lo; m <= m_hi; ++m) G[m - m_lo] = gn(m * h - lam);

        for (int k = k_lo; k <= k_hi; ++k) {
            const cplx dk = p.gain * delay_part[k - k_lo];
            const auto& ph = doppler_phase[k - k_lo];
            for (int l = l_lo; l <= l_hi; ++l) {
                cplx s{};
                const long base = static_cast<long>(l) * os - m_lo;
                for (long j = -Jn; j <= Jn; ++j) {
                    const double g2 = G[base - j];
                    if (g2 == 0.0) continue;
                    s += (g0n[j + Jn] * g2) * ph[j + Jn];
                }
                acc[static_cast<std::size_t>(k - k_lo) * nl + (l - l_lo)] += dk * s * h;
            }
        }
    }

    std::vector<Tap> taps;
    taps.reserve(acc.size());
    for (int k = k_lo; k <= k_hi; ++k)
        for (int l = l_lo; l <= l_hi; ++l)
            taps.push_back(Tap{k, l, acc[static_cast<std::size_t>(k - k_lo) * nl + (l - l_lo)]});
    eff.taps = TapSet(std::move(taps));
    return eff;
}

void add_noise(DDSignal& x, double var, std::mt19937_64& rng) {
    if (var < 0.0) throw PreconditionError("add_noise: negative noise variance");
    if (var == 0.0) return;
    std::normal_distribution<double> gauss(0.0, std::sqrt(var / 2.0));
    for (auto& v : x.values()) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v += cplx{re, im};
    }
}

DDSignal apply_channel(const DDSignal& x, const TapSet& h, double noise_variance, std::uint64_t seed) {
    if (noise_variance < 0.0) throw PreconditionError("apply_channel: negative noise variance");
    DDSignal y = twisted_convolve(h, x);
    std::mt19937_64 rng(seed);
    add_noise(y, noise_variance, rng);
    return y;
}

DDSignal apply_channel(const DDSignal& x, const EffectiveChannel& h, double noise_variance, std::uint64_t seed) {
    return apply_channel(x, h.taps, noise_variance, seed);
}

SparseMatrix build_io_matrix(const TapSet& h, const DDGrid& grid) {
    const int M = grid.M(), N = grid.N();
    const std::int64_t MN = grid.size();
    const RootTable xiN(N), xiMN(MN);
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(static_cast<std::size_t>(MN) * h.size());
    for (int k0 = 0; k0 < M; ++k0) {
        for (int l0 = 0; l0 < N; ++l0) {
            const int col = k0 * N + l0;
            for (const auto& t : h) {
                const std::int64_t s = std::int64_t{k0} + t.k;
                const std::int64_t n = floor_div(s, M);
                const std::int64_t k = s - n * M;
                const std::int64_t l = mod(std::int64_t{l0} + t.l, N);
                const cplx v = t.value * xiN(-n * l0) * xiMN(mul_mod(t.l, k0 - n * M, MN));
                trip.emplace_back(static_cast<int>(k * N + l), col, v);
            }
        }
    }
    SparseMatrix H(MN, MN);
    H.setFromTriplets(trip.begin(), trip.end());
    return H;
}

SparseMatrix build_time_matrix(const TapSet& h, const DDGrid& grid) {
    const std::int64_t MN = grid.size();
    const RootTable xi(MN);
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(static_cast<std::size_t>(MN) * h.size());
    for (std::int64_t n = 0; n < MN; ++n)
        for (const auto& t : h) {
            const std::int64_t src = n - t.k;
            trip.emplace_back(static_cast<int>(n), static_cast<int>(mod(src, MN)),
                              t.value * xi(mul_mod(t.l, src, MN)));
        }
    SparseMatrix H(MN, MN);
    H.setFromTriplets(trip.begin(), trip.end());
    return H;
}

}  // namespace zakotfs
