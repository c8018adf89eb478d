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
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "zakotfs/channel.hpp"
#include "zakotfs/twisted.hpp"
#include "zakotfs/waveforms.hpp"

namespace zakotfs {

using SpreadPilot = std::variant<ChirpPilot, ZCPilot>;

const DDGrid& pilot_grid(const SpreadPilot& p);
/// Unit-energy DD signal of the pilot.
DDSignal pilot_signal(const SpreadPilot& p);

/// True when shift (k, l) lies on the support of the pilot's
/// self-ambiguity. ZC: l = -u k (mod MN). Chirp: the lattice
/// k = (1/(2aM) - 2aM) l (mod N), l = 2bN k (mod M).
bool on_self_ambiguity_support(const SpreadPilot& p, long long k, long long l);

/// Rectangle of taps read off around the origin.
struct ReadoffRegion {
    int k_lo = 0;
    int k_hi = 0;
    int l_lo = 0;
    int l_hi = 0;

    /// k in [-margin, k_max + margin], l in [-l_max - margin, l_max + margin].
    static ReadoffRegion around(int k_max, int l_max, int margin);

    bool contains(int k, int l) const { return k >= k_lo && k <= k_hi && l >= l_lo && l <= l_hi; }
    int size() const { return (k_hi - k_lo + 1) * (l_hi - l_lo + 1); }
};

/// CrystallizationError when some nonzero support point of the pilot's
/// self-ambiguity falls in the difference set of the region, i.e. when two
/// read-off taps would alias.
void check_readoff(const SpreadPilot& p, const ReadoffRegion& region);

struct ChannelEstimate {
    TapSet taps;
    ReadoffRegion region;
};

/// h[k, l] = A_{y, p}[k, l] / sqrt(Ep) over the region; taps below
/// rel_threshold times the largest estimated magnitude are dropped.
ChannelEstimate estimate_channel(const DDSignal& y, const SpreadPilot& pilot, double pilot_energy,
                                 const ReadoffRegion& region, double rel_threshold = 1e-3);

/// y - est *sigma (sqrt(Ep) p).
DDSignal cancel_pilot(const DDSignal& y, const TapSet& est, const DDSignal& unit_pilot, double pilot_energy);

/// Nearest 4-QAM point, constellation (+-1 +-j) / sqrt(2).
cplx qam4_decide(cplx s);
std::vector<cplx> random_qam4(std::size_t n, std::mt19937_64& rng);

struct Detection {
    std::vector<cplx> soft;
    std::vector<cplx> symbols;
};

/// soft = (H^H H + var I)^{-1} H^H y with H the I/O matrix of h. The system
/// is solved in time, where it is banded; var = 0 is zero forcing and
/// throws NumericalError when H is singular.
Detection lmmse_detect(const DDSignal& y_data, const TapSet& h, double var);

/// sum |est - truth|^2 / sum |truth|^2 over the union of supports.
double nmse(const TapSet& est, const TapSet& truth);
/// Bit error rate of Gray-mapped 4-QAM decisions (one bit per quadrature).
double ber(std::span<const cplx> decisions, std::span<const cplx> truth);

struct FramePlan {
    SpreadPilot pilot;
    double pilot_energy;
    double noise_variance;
    ReadoffRegion region;
    double tap_threshold = 1e-3;
};

struct TurboResult {
    std::vector<ChannelEstimate> estimates;
    std::vector<std::vector<cplx>> decisions;
    std::vector<double> nmse;  // filled when a true channel is given
    std::vector<double> ber;   // filled when true symbols are given
};

/// Iteration 1: estimate, cancel the pilot, detect. Every further iteration
/// removes the re-modulated hard decisions from y, re-estimates, re-cancels
/// and re-detects.
TurboResult turbo_iterate(const DDSignal& y, const FramePlan& plan, int iterations,
                          const TapSet* true_channel = nullptr, std::span<const cplx> true_symbols = {});

/// Reference with a dedicated sensing subframe: the channel is read off a
/// pilot-only frame and the data frame carries no pilot.
Detection separate_subframe_detect(const DDSignal& y_pilot, const DDSignal& y_data, const FramePlan& plan,
                                   ChannelEstimate* estimate_out = nullptr);

}  // namespace zakotfs
