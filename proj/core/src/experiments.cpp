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

#include "zakotfs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/parallel.hpp"
#include "zakotfs/rach.hpp"
#include "zakotfs/twisted.hpp"

namespace zakotfs {

namespace {

struct MeanSe {
    double mean;
    double se;
};

MeanSe mean_se(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    if (v.empty()) return {0.0, 0.0};
    double s = 0.0;
    for (double x : v) s += x;
    const double m = s / n;
    if (v.size() < 2) return {m, 0.0};
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return {m, std::sqrt(ss / (n - 1.0) / n)};
}

// Serializes progress callbacks coming from worker threads.
class ProgressSink {
public:
    ProgressSink(const Progress& p, std::size_t total) : progress_(p), total_(total) {}
    void tick() {
        if (!progress_) return;
        std::lock_guard lock(mutex_);
        progress_(++done_, total_);
    }

private:
    const Progress& progress_;
    std::size_t total_;
    std::size_t done_ = 0;
    std::mutex mutex_;
};

DDSignal unit_noise(const DDGrid& g, std::mt19937_64& rng) {
    DDSignal n(g);
    add_noise(n, 1.0, rng);
    return n;
}

// y = sqrt(Ep) hp + hd + sigma n
DDSignal compose(const DDSignal& hp, double Ep, const DDSignal* hd, const DDSignal& n, double sigma) {
    DDSignal y = hp * cplx{std::sqrt(Ep), 0.0};
    if (hd) y += *hd;
    y += n * cplx{sigma, 0.0};
    return y;
}

}  // namespace

double pilot_energy_for(double pdr_db, PdrReference ref, const DDGrid& grid) {
    const double pdr = std::pow(10.0, pdr_db / 10.0);
    return ref == PdrReference::Frame ? pdr * grid.size() : pdr;
}

SpreadPilot PilotSpec::make(const DDGrid& grid) const {
    if (kind == Kind::Zc) return ZCPilot(grid, parameter);
    return ChirpPilot(grid, parameter);
}

std::string PilotSpec::name() const { return kind == Kind::Zc ? "zc" : "chirp"; }

std::optional<std::int64_t> crystalline_zc_root(const DDGrid& grid, const ReadoffRegion& region, std::int64_t start) {
    for (std::int64_t u = std::max<std::int64_t>(start, 1); u < grid.size(); ++u) {
        if (gcd(u, grid.size()) != 1) continue;
        try {
            check_readoff(ZCPilot(grid, u), region);
            return u;
        } catch (const CrystallizationError&) {
        }
    }
    return std::nullopt;
}

double LinkConfig::noise_variance() const { return std::pow(10.0, -data_snr_db / 10.0); }

ReadoffRegion LinkConfig::region() const {
    const auto cr = check_crystallization(grid, VehA::max_delay(), nu_max);
    if (!cr.satisfied) throw CrystallizationError("channel spread violates the crystallization condition");
    return ReadoffRegion::around(cr.k_max, cr.l_max, readoff_margin);
}

std::vector<NmseRow> run_nmse(const LinkConfig& cfg, const Progress& progress) {
    const DDGrid& g = cfg.grid;
    const ReadoffRegion region = cfg.region();
    const double sigma = std::sqrt(cfg.noise_variance());
    std::vector<SpreadPilot> pilots;
    std::vector<DDSignal> unit;
    for (const auto& spec : cfg.pilots) {
        pilots.push_back(spec.make(g));
        check_readoff(pilots.back(), region);
        unit.push_back(pilot_signal(pilots.back()));
    }
    const std::size_t P = pilots.size(), R = cfg.pdr_db.size();
    std::vector<double> result(cfg.trials * P * R);
    ProgressSink sink(progress, cfg.trials);

    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
        std::mt19937_64 rng(cfg.seed ^ t);
        const PhysicalChannel phy = draw_veh_a(rng(), cfg.nu_max);
        const TapSet truth = effective_channel(phy, cfg.filter, g).taps;
        const auto symbols = random_qam4(static_cast<std::size_t>(g.size()), rng);
        const DDSignal hd = twisted_convolve(truth, data_frame_signal(symbols, g));
        const DDSignal n = unit_noise(g, rng);
        for (std::size_t p = 0; p < P; ++p) {
            const DDSignal hp = twisted_convolve(truth, unit[p]);
            for (std::size_t r = 0; r < R; ++r) {
                const double Ep = pilot_energy_for(cfg.pdr_db[r], cfg.pdr_reference, g);
                const DDSignal y = compose(hp, Ep, &hd, n, sigma);
                const auto est = estimate_channel(y, pilots[p], Ep, region, cfg.tap_threshold);
                result[(t * P + p) * R + r] = nmse(est.taps, truth);
            }
        }
        sink.tick();
    });

    std::vector<NmseRow> rows;
    for (std::size_t p = 0; p < P; ++p)
        for (std::size_t r = 0; r < R; ++r) {
            std::vector<double> v;
            for (std::size_t t = 0; t < cfg.trials; ++t) v.push_back(result[(t * P + p) * R + r]);
            const auto ms = mean_se(v);
            const double db = 10.0 * std::log10(ms.mean);
            const double se_db = ms.mean > 0.0 ? 10.0 / std::log(10.0) * ms.se / ms.mean : 0.0;
            rows.push_back({cfg.pdr_db[r], cfg.pilots[p].name(), ms.mean, db, se_db, cfg.trials});
        }
    return rows;
}

std::vector<BerRow> run_ber(const LinkConfig& cfg, const Progress& progress) {
    if (cfg.iterations < 1) throw PreconditionError("run_ber: iterations must be >= 1");
    const DDGrid& g = cfg.grid;
    const ReadoffRegion region = cfg.region();
    const double sigma = std::sqrt(cfg.noise_variance());
    std::vector<SpreadPilot> pilots;
    std::vector<DDSignal> unit;
    for (const auto& spec : cfg.pilots) {
        pilots.push_back(spec.make(g));
        check_readoff(pilots.back(), region);
        unit.push_back(pilot_signal(pilots.back()));
    }
    const std::size_t P = pilots.size(), R = cfg.pdr_db.size();
    const std::size_t C = static_cast<std::size_t>(cfg.iterations) + (cfg.baseline ? 1 : 0);
    std::vector<double> result(cfg.trials * P * R * C);
    ProgressSink sink(progress, cfg.trials);

    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
        std::mt19937_64 rng(cfg.seed ^ t);
        const PhysicalChannel phy = draw_veh_a(rng(), cfg.nu_max);
        const TapSet truth = effective_channel(phy, cfg.filter, g).taps;
        const auto symbols = random_qam4(static_cast<std::size_t>(g.size()), rng);
        const DDSignal hd = twisted_convolve(truth, data_frame_signal(symbols, g));
        const DDSignal n = unit_noise(g, rng);
        const DDSignal n2 = unit_noise(g, rng);
        for (std::size_t p = 0; p < P; ++p) {
            const DDSignal hp = twisted_convolve(truth, unit[p]);
            for (std::size_t r = 0; r < R; ++r) {
                const double Ep = pilot_energy_for(cfg.pdr_db[r], cfg.pdr_reference, g);
                const FramePlan plan{pilots[p], Ep, cfg.noise_variance(), region, cfg.tap_threshold};
                const DDSignal y = compose(hp, Ep, &hd, n, sigma);
                const auto tr = turbo_iterate(y, plan, cfg.iterations, nullptr, symbols);
                double* out = &result[((t * P + p) * R + r) * C];
                for (int i = 0; i < cfg.iterations; ++i) out[i] = tr.ber[static_cast<std::size_t>(i)];
                if (cfg.baseline) {
                    const DDSignal y_pilot = compose(hp, Ep, nullptr, n2, sigma);
                    DDSignal y_data = hd;
                    y_data += n * cplx{sigma, 0.0};
                    out[cfg.iterations] = ber(separate_subframe_detect(y_pilot, y_data, plan).symbols, symbols);
                }
            }
        }
        sink.tick();
    });

    std::vector<BerRow> rows;
    for (std::size_t p = 0; p < P; ++p)
        for (std::size_t r = 0; r < R; ++r)
            for (std::size_t c = 0; c < C; ++c) {
                std::vector<double> v;
                for (std::size_t t = 0; t < cfg.trials; ++t) v.push_back(result[((t * P + p) * R + r) * C + c]);
                const auto ms = mean_se(v);
                const int iters = c < static_cast<std::size_t>(cfg.iterations) ? static_cast<int>(c) + 1 : 0;
                rows.push_back({cfg.pdr_db[r], cfg.pilots[p].name(), iters, ms.mean, ms.se, cfg.trials});
            }
    return rows;
}

RachResult run_rach(const RachConfig& cfg, const Progress& progress) {
    const DDGrid& g = cfg.grid;
    RachResult res;
    res.roots = cfg.roots.empty()
                    ? draw_preamble_roots(g, static_cast<std::size_t>(cfg.preambles), cfg.root_seed)
                    : cfg.roots;
    if (cfg.active_users < 0 || static_cast<std::size_t>(cfg.active_users) > res.roots.size())
        throw PreconditionError("run_rach: more active users than preambles");
    const ObservationMatrix A = build_observation_matrix(res.roots, g, cfg.filter, cfg.tau_max, cfg.nu_max);
    std::vector<ZCPilot> zc;
    for (auto u : res.roots) zc.emplace_back(g, u);

    static const char* names[] = {"on-grid", "blind-grouped", "blind-ungrouped", "cross-ambiguity"};
    constexpr std::size_t D = 4;
    const std::size_t S = cfg.snr_db.size();
    std::vector<double> missed(cfg.trials * S * D);
    ProgressSink sink(progress, cfg.trials);

    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
        AccessTrial trial = simulate_access_trial(cfg.active_users, res.roots, g, cfg.filter, cfg.nu_max, 0.0,
                                                  cfg.seed ^ t, cfg.delay_jitter);
        const auto delays = path_delay_bins(trial, g);
        const int K = cfg.active_users;
        auto miss = [&](const std::vector<int>& found) {
            if (K == 0) return 0.0;
            std::size_t hit = 0;
            for (int j : trial.active) hit += std::binary_search(found.begin(), found.end(), j);
            return 1.0 - static_cast<double>(hit) / K;
        };
        for (std::size_t s = 0; s < S; ++s) {
            trial.noise_variance = 1.0 / (std::pow(10.0, cfg.snr_db[s] / 10.0) * g.size());
            const DDSignal y = trial.received();
            double* out = &missed[(t * S + s) * D];
            out[0] = miss(ost_detect(A, y, K, OstMode::OnGrid, delays));
            out[1] = miss(ost_detect(A, y, K, OstMode::BlindGrouped));
            out[2] = miss(ost_detect(A, y, K, OstMode::BlindUngrouped));
            out[3] = miss(crossamb_detect(y, zc, K));
        }
        sink.tick();
    });

    for (std::size_t s = 0; s < S; ++s)
        for (std::size_t d = 0; d < D; ++d) {
            std::vector<double> v;
            for (std::size_t t = 0; t < cfg.trials; ++t) v.push_back(missed[(t * S + s) * D + d]);
            const auto ms = mean_se(v);
            res.rows.push_back({cfg.snr_db[s], names[d], ms.mean, ms.se, cfg.trials});
        }
    return res;
}

}  // namespace zakotfs
