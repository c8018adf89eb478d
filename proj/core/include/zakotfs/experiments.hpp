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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zakotfs/channel.hpp"
#include "zakotfs/receiver.hpp"

namespace zakotfs {

/// Called with (completed, total) as trials finish.
using Progress = std::function<void(std::size_t, std::size_t)>;

/// How a PDR value maps to pilot energy. Frame: Ep = PDR * MN * Es, the
/// pilot carries PDR times the energy of the whole data frame, so pilot and
/// data powers over the subframe have ratio PDR. Symbol: Ep = PDR * Es.
enum class PdrReference { Frame, Symbol };

double pilot_energy_for(double pdr_db, PdrReference ref, const DDGrid& grid);

struct PilotSpec {
    enum class Kind { Zc, Chirp };
    Kind kind = Kind::Zc;
    std::int64_t parameter = 11;  // root u or slope q

    SpreadPilot make(const DDGrid& grid) const;
    std::string name() const;
};

/// Smallest root >= start, coprime to MN, whose self-ambiguity lattice stays
/// clear of the region's difference set.
std::optional<std::int64_t> crystalline_zc_root(const DDGrid& grid, const ReadoffRegion& region,
                                                std::int64_t start = 1);

struct LinkConfig {
    DDGrid grid{31, 37, 30.0e3};
    PulseShapingFilter filter{};
    double nu_max = 815.0;
    double data_snr_db = 25.0;
    std::vector<double> pdr_db{0, 5, 10, 15, 20, 25, 30, 35, 40};
    PdrReference pdr_reference = PdrReference::Frame;
    std::vector<PilotSpec> pilots{{PilotSpec::Kind::Zc, 11}, {PilotSpec::Kind::Chirp, 3}};
    int readoff_margin = 2;
    double tap_threshold = 1e-3;
    int iterations = 1;
    bool baseline = false;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    double noise_variance() const;
    ReadoffRegion region() const;
};

struct NmseRow {
    double pdr_db;
    std::string pilot;
    double nmse;      // mean linear NMSE
    double nmse_db;   // 10 log10 of the mean
    double stderr_db; // standard error of the mean, mapped to dB
    std::size_t trials;
};

/// Per trial: one Veh-A draw, one data frame and one noise draw shared by
/// every PDR point and pilot.
std::vector<NmseRow> run_nmse(const LinkConfig& cfg, const Progress& progress = {});

struct BerRow {
    double pdr_db;
    std::string pilot;
    int iterations;  // 0 marks the separate-subframe baseline
    double ber;
    double stderr_ber;
    std::size_t trials;
};

/// Every turbo run of cfg.iterations also yields the curves for fewer
/// iterations, so rows are produced for 1 .. cfg.iterations.
std::vector<BerRow> run_ber(const LinkConfig& cfg, const Progress& progress = {});

struct RachConfig {
    DDGrid grid{31, 37, 30.0e3};
    PulseShapingFilter filter{};
    double nu_max = 815.0;
    double tau_max = 2.51e-6;
    double delay_jitter = 0.0;
    int active_users = 4;
    int preambles = 16;
    std::vector<std::int64_t> roots;  // empty: drawn from root_seed
    std::uint64_t root_seed = 7;
    std::vector<double> snr_db{-24, -21, -18, -15, -12, -9, -6, -3, 0};
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct RachRow {
    double snr_db;
    std::string detector;
    double missed;     // 1 - P_d
    double stderr_missed;
    std::size_t trials;
};

struct RachResult {
    std::vector<std::int64_t> roots;
    std::vector<RachRow> rows;
};

/// Missed-detection probability for the detectors "on-grid", "blind-grouped",
/// "blind-ungrouped" and "cross-ambiguity". The same users, channels and
/// unit noise are reused at every SNR point.
RachResult run_rach(const RachConfig& cfg, const Progress& progress = {});


}  // namespace zakotfs
