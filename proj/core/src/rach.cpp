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

#include "zakotfs/rach.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "zakotfs/ambiguity.hpp"
#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/twisted.hpp"

namespace zakotfs {

namespace {

int snapped_ceil(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<int>(r);
    return static_cast<int>(std::ceil(x));
}

}  // namespace

DelayDopplerSets::DelayDopplerSets(const DDGrid& grid, double tau_max, double nu_max) {
    if (tau_max < 0.0 || nu_max < 0.0) throw PreconditionError("DelayDopplerSets: negative spread");
    const int kd = snapped_ceil(tau_max * grid.M() / grid.delay_period());
    const int ld = snapped_ceil(nu_max * grid.N() / grid.doppler_period());
    for (int k = 0; k <= kd; ++k) delays.push_back(k);
    for (int l = -ld; l <= ld; ++l) dopplers.push_back(l);
    for (int k : delays)
        for (int l : dopplers) hypotheses.push_back({k, l});
}

ObservationMatrix build_observation_matrix(const std::vector<std::int64_t>& roots, const DDGrid& grid,
                                           const PulseShapingFilter& filt, double tau_max, double nu_max) {
    if (std::set<std::int64_t>(roots.begin(), roots.end()).size() != roots.size())
        throw ConstructionError("build_observation_matrix: duplicate preamble roots");
    const DelayDopplerSets sets(grid, tau_max, nu_max);

    std::vector<DDSignal> pilots;
    for (auto u : roots) pilots.push_back(zc_pilot_signal(ZCPilot(grid, u)));

    const auto n = static_cast<Eigen::Index>(grid.size());
    const auto S = static_cast<Eigen::Index>(sets.size());
    Eigen::MatrixXcd A(n, S * static_cast<Eigen::Index>(roots.size()));
    for (Eigen::Index i = 0; i < S; ++i) {
        const auto& hyp = sets.hypotheses[static_cast<std::size_t>(i)];
        PhysicalChannel phy;
        phy.tau_max = tau_max;
        phy.nu_max = nu_max;
        phy.paths.push_back({cplx{1.0, 0.0}, hyp.k * grid.delay_resolution(), hyp.l * grid.doppler_resolution()});
        const TapSet h = effective_channel(phy, filt, grid).taps;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const DDSignal col = twisted_convolve(h, pilots[j]);
            const double norm = std::sqrt(col.energy());
            if (!(norm > 0.0)) throw NumericalError("build_observation_matrix: zero dictionary column");
            const Eigen::Index c = static_cast<Eigen::Index>(j) * S + i;
            for (Eigen::Index r = 0; r < n; ++r) A(r, c) = col.values()[static_cast<std::size_t>(r)] / norm;
        }
    }
    return ObservationMatrix{grid, roots, sets, std::move(A)};
}

std::vector<std::int64_t> draw_preamble_roots(const DDGrid& grid, std::size_t count, std::uint64_t seed) {
    const std::int64_t MN = grid.size();
    std::vector<std::int64_t> pool;
    for (std::int64_t u = 1; u < MN; ++u)
        if (gcd(u, MN) == 1) pool.push_back(u);
    if (count > pool.size()) throw PreconditionError("draw_preamble_roots: not enough roots coprime to MN");
    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

DDSignal AccessTrial::received() const {
    DDSignal y = noise;
    y *= cplx{std::sqrt(noise_variance), 0.0};
    y += clean;
    return y;
}

AccessTrial simulate_access_trial(int K, const std::vector<std::int64_t>& roots, const DDGrid& grid,
                                  const PulseShapingFilter& filt, double nu_max, double snr_db, std::uint64_t seed,
                                  double delay_jitter) {
    if (K < 0 || static_cast<std::size_t>(K) > roots.size())
        throw PreconditionError("simulate_access_trial: K = " + std::to_string(K) + " exceeds the " +
                                std::to_string(roots.size()) + " preambles");
    std::mt19937_64 rng(seed);
    std::vector<int> idx(roots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(K));
    std::sort(idx.begin(), idx.end());

    AccessTrial trial{idx, {}, DDSignal(grid), DDSignal(grid), 0.0};
    for (int j : idx) {
        PhysicalChannel phy = draw_veh_a(rng(), nu_max, delay_jitter);
        const TapSet h = effective_channel(phy, filt, grid).taps;
        trial.clean += twisted_convolve(h, zc_pilot_signal(ZCPilot(grid, roots[static_cast<std::size_t>(j)])));
        trial.channels.push_back(std::move(phy));
    }
    std::mt19937_64 noise_rng(rng());
    add_noise(trial.noise, 1.0, noise_rng);
    trial.noise_variance = 1.0 / (std::pow(10.0, snr_db / 10.0) * static_cast<double>(grid.size()));
    return trial;
}

std::vector<int> top_k(const std::vector<double>& scores, int K) {
    if (K < 0 || static_cast<std::size_t>(K) > scores.size())
        throw PreconditionError("top_k: K exceeds the number of candidates");
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return scores[a] > scores[b]; });
    order.resize(static_cast<std::size_t>(K));
    std::sort(order.begin(), order.end());
    return order;
}

std::vector<int> ost_detect(const ObservationMatrix& A, const DDSignal& y, int K, OstMode mode,
                            const std::vector<int>& known_delays) {
    if (!(y.grid() == A.grid)) throw DimensionError("ost_detect: grid mismatch");
    const auto n = static_cast<Eigen::Index>(A.grid.size());
    const Eigen::Map<const Eigen::VectorXcd> yv(y.values().data(), n);
    const Eigen::VectorXcd f = A.A.adjoint() * yv;

    const std::set<int> delay_set(known_delays.begin(), known_delays.end());
    std::vector<double> score(A.preambles(), 0.0);
    for (Eigen::Index c = 0; c < f.size(); ++c) {
        const auto col = static_cast<std::size_t>(c);
        const double e = std::norm(f[c]);
        double& s = score[A.preamble_of(col)];
        switch (mode) {
            case OstMode::BlindGrouped: s += e; break;
            case OstMode::BlindUngrouped: s = std::max(s, e); break;
            case OstMode::OnGrid:
                if (delay_set.count(A.sets.hypotheses[A.hypothesis_of(col)].k)) s += e;
                break;
        }
    }
    return top_k(score, K);
}

std::vector<int> crossamb_detect(const DDSignal& y, const std::vector<ZCPilot>& preambles, int K) {
    std::vector<double> score;
    score.reserve(preambles.size());
    for (const auto& z : preambles) score.push_back(max_zc_cross_ambiguity(y, z));
    return top_k(score, K);
}

std::vector<int> path_delay_bins(const AccessTrial& trial, const DDGrid& grid) {
    std::set<int> bins;
    for (const auto& ch : trial.channels)
        for (const auto& p : ch.paths) bins.insert(static_cast<int>(std::lround(p.delay * grid.bandwidth())));
    return {bins.begin(), bins.end()};
}

}  // namespace zakotfs
