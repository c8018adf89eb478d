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
#include <vector>

#include <Eigen/Dense>

#include "zakotfs/channel.hpp"
#include "zakotfs/waveforms.hpp"

namespace zakotfs {

/// Delay bins 0 .. ceil(tau_max B) and Doppler bins -ceil(nu_max T) ..
/// ceil(nu_max T); the hypothesis list is delay-major.
struct DelayDopplerSets {
    DelayDopplerSets(const DDGrid& grid, double tau_max, double nu_max);

    struct Hypothesis {
        int k;
        int l;
    };

    std::vector<int> delays;
    std::vector<int> dopplers;
    std::vector<Hypothesis> hypotheses;

    std::size_t size() const { return hypotheses.size(); }
};

/// Dictionary of channel-shaped preamble translates. Column j |S| + i is
/// h_eff,i *sigma z_j with unit norm, where h_eff,i is the effective channel
/// of a unit path at the i-th hypothesis.
struct ObservationMatrix {
    DDGrid grid;
    std::vector<std::int64_t> roots;
    DelayDopplerSets sets;
    Eigen::MatrixXcd A;

    std::size_t preambles() const { return roots.size(); }
    std::size_t group_size() const { return sets.size(); }
    std::size_t preamble_of(std::size_t col) const { return col / sets.size(); }
    std::size_t hypothesis_of(std::size_t col) const { return col % sets.size(); }
};

ObservationMatrix build_observation_matrix(const std::vector<std::int64_t>& roots, const DDGrid& grid,
                                           const PulseShapingFilter& filt, double tau_max, double nu_max);

/// `count` distinct roots coprime to MN in [1, MN), chosen by the seed and
/// returned in ascending order.
std::vector<std::int64_t> draw_preamble_roots(const DDGrid& grid, std::size_t count, std::uint64_t seed);

struct AccessTrial {
    std::vector<int> active;                 // sorted preamble indices
    std::vector<PhysicalChannel> channels;   // one per active user, same order
    DDSignal clean;                          // sum of the users' received pilots
    DDSignal noise;                          // unit per-sample variance
    double noise_variance = 0.0;

    DDSignal received() const;
};

/// K users pick distinct preambles uniformly, each sees an independent Veh-A
/// draw. Per-user SNR is pilot energy (one) over noise variance times MN.
AccessTrial simulate_access_trial(int K, const std::vector<std::int64_t>& roots, const DDGrid& grid,
                                  const PulseShapingFilter& filt, double nu_max, double snr_db, std::uint64_t seed,
                                  double delay_jitter = 0.0);

enum class OstMode { BlindGrouped, BlindUngrouped, OnGrid };

/// Top-K preambles by group score from f = A^H y. Grouped sums |f_i|^2 over
/// the group, ungrouped takes the largest |f_i|^2, on-grid sums only over
/// hypotheses whose delay bin is in known_delays. Ties go to the lower
/// index. Returns ascending indices.
std::vector<int> ost_detect(const ObservationMatrix& A, const DDSignal& y, int K, OstMode mode,
                            const std::vector<int>& known_delays = {});

/// Top-K preambles by the largest cross-ambiguity magnitude over all shifts.
std::vector<int> crossamb_detect(const DDSignal& y, const std::vector<ZCPilot>& preambles, int K);

/// Top-K indices of scores, ties to the lower index, returned ascending.
std::vector<int> top_k(const std::vector<double>& scores, int K);

/// Nearest delay bins of the users' paths.
std::vector<int> path_delay_bins(const AccessTrial& trial, const DDGrid& grid);

}  // namespace zakotfs
