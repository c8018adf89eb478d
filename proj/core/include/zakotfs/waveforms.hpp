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
#include <span>
#include <vector>

#include "zakotfs/dd_signal.hpp"

namespace zakotfs {

/// Dirac pulse on the information lattice, quasi-periodically extended.
struct PointPilot {
    PointPilot(DDGrid grid, int k_p, int l_p, double energy = 1.0);

    DDGrid grid;
    int k_p;
    int l_p;
    double energy;
};

/// Spread pilot obtained by applying the MN-periodic chirp filter
/// w_q[k, l] = xi_MN^{q k^2 + q l^2} to a point pilot at the origin.
class ChirpPilot {
public:
    ChirpPilot(DDGrid grid, std::int64_t q);

    const DDGrid& grid() const { return grid_; }
    std::int64_t q() const { return q_; }
    /// q = a M + b N (mod MN), 0 <= a < N, 0 <= b < M.
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

private:
    DDGrid grid_;
    std::int64_t q_;
    std::int64_t a_;
    std::int64_t b_;
};

/// Zadoff-Chu spread pilot of composite length MN.
class ZCPilot {
public:
    ZCPilot(DDGrid grid, std::int64_t u);

    const DDGrid& grid() const { return grid_; }
    std::int64_t root() const { return u_; }

    /// X_u[n] = xi_MN^{-u n (n + 1) / 2}, n = 0 .. MN - 1.
    std::vector<cplx> sequence() const;

private:
    DDGrid grid_;
    std::int64_t u_;
};

std::vector<cplx> zc_sequence(std::int64_t u, std::int64_t length);

DDSignal point_pilot_signal(const PointPilot& p);

/// Closed form
///   (1/sqrt(MN)) xi_N^{aMl^2} xi_M^{-bNk^2} xi_N^{-l^2 / (4aM)} xi_N^{kl}
/// with the division taken as a modular inverse mod N.
DDSignal chirp_pilot_signal(const ChirpPilot& c);

/// Closed form
///   (1/sqrt(MN)) xi_MN^{-uk(k+1)/2} xi_N^{(u(2k+1) + 2l)^2 / (8uM)}.
DDSignal zc_pilot_signal(const ZCPilot& z);
/// Unit-energy ZC sequence of length MN taken through the Zak transform.
/// Valid on any grid and for any root, unlike the closed form.
DDSignal zc_signal_from_sequence(std::int64_t u, const DDGrid& grid);

/// |sum_{p<N} xi_N^{a p^2}|. PreconditionError for even N or gcd(a, N) != 1.
double gauss_sum_magnitude(std::int64_t N, std::int64_t a);

/// Data frame: one point pulse per grid point. The fundamental region is
/// the symbol array itself (k-major).
DDSignal data_frame_signal(std::span<const cplx> symbols, const DDGrid& grid);

/// Continuous-time realization of one subframe sampled Q times per 1/B:
/// the critically sampled inverse Zak samples are interpolated with the
/// MN-periodic delay-domain RRC pulse. Length Q M N.
TDSignal oversampled_realization(const DDSignal& x, int Q, double beta_tau);

}  // namespace zakotfs
