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

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/SparseCore>

#include "zakotfs/dd_signal.hpp"
#include "zakotfs/twisted.hpp"

namespace zakotfs {

struct ChannelPath {
    cplx gain;
    double delay;    // seconds, >= 0
    double doppler;  // Hz
};

struct PhysicalChannel {
    std::vector<ChannelPath> paths;
    double tau_max = 0.0;
    double nu_max = 0.0;
};

/// Veh-A power-delay profile: delays in seconds and mean path powers
/// normalized to unit sum.
struct VehA {
    static constexpr int kPaths = 6;
    static const std::vector<double>& delays();
    static const std::vector<double>& powers();
    static double max_delay() { return 2.51e-6; }
};

/// Six Rayleigh paths with the Veh-A profile and Dopplers nu_max cos(theta),
/// theta uniform on [0, 2 pi). With delay_jitter > 0 every path delay is
/// offset by an independent uniform draw from [0, delay_jitter).
PhysicalChannel draw_veh_a(std::uint64_t seed, double nu_max, double delay_jitter = 0.0);

/// Transmit/receive filter pair. Rrc: w_tx factorizes into an RRC pulse of
/// bandwidth B in delay and of duration T in Doppler, w_rx is matched.
/// Ideal: the lattice limit, only on-grid paths, one tap per path.
struct PulseShapingFilter {
    enum class Kind { Rrc, Ideal };

    Kind kind = Kind::Rrc;
    double beta_tau = 0.6;
    double beta_nu = 0.6;
    int oversample = 16;         // quadrature points per lattice step
    double truncation = 1e-4;    // relative tail floor of the pulse

    static PulseShapingFilter ideal() {
        PulseShapingFilter f;
        f.kind = Kind::Ideal;
        return f;
    }
};

struct Crystallization {
    int k_max;
    int l_max;
    bool satisfied;
};

/// k_max = ceil(M tau_max nu_p), l_max = ceil(2 N nu_max / nu_p); satisfied
/// iff k_max < M and l_max < N.
Crystallization check_crystallization(const DDGrid& grid, double tau_max, double nu_max);

struct EffectiveChannel {
    TapSet taps;
    int k_max = 0;
    int l_max = 0;
    int k_margin = 4;
    int l_margin = 4;
};

/// Taps of w_rx *sigma h_phy *sigma w_tx on k in [-k_margin, k_max + k_margin],
/// l in [-l_max - l_margin, l_max + l_margin]. For RRC filters each path
/// contributes
///
///   h e^{j2pi lam (k - kap) / MN} Phi(k - kap, lam / MN) Phi(l - lam, -k / MN)
///
/// with kap = B tau, lam = T nu and Phi from rrc_cross. An identity channel
/// gives a unit tap at the origin.
EffectiveChannel effective_channel(const PhysicalChannel& phy, const PulseShapingFilter& filt,
                                   const DDGrid& grid, int k_margin = 4, int l_margin = 4);

/// Circularly symmetric complex Gaussian noise, per-sample variance var.
void add_noise(DDSignal& x, double var, std::mt19937_64& rng);

/// h *sigma x + noise.
DDSignal apply_channel(const DDSignal& x, const TapSet& h, double noise_variance, std::uint64_t seed);
DDSignal apply_channel(const DDSignal& x, const EffectiveChannel& h, double noise_variance, std::uint64_t seed);

using SparseMatrix = Eigen::SparseMatrix<cplx, Eigen::ColMajor>;

/// H with vec(h *sigma x) = H vec(x), vec in k-major order.
SparseMatrix build_io_matrix(const TapSet& h, const DDGrid& grid);

/// The same operator on critically sampled time samples: a tap (k, l) maps
/// x[n] to h x[n - k] e^{j 2 pi l (n - k) / MN} (indices mod MN). Since the
/// Zak transform is unitary, solving in time is equivalent and the matrix is
/// banded up to the periodic wrap.
SparseMatrix build_time_matrix(const TapSet& h, const DDGrid& grid);

}  // namespace zakotfs
