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

// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "zakotfs/ambiguity.hpp"
#include "zakotfs/channel.hpp"
#include "zakotfs/experiments.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/parallel.hpp"
#include "zakotfs/rach.hpp"
#include "zakotfs/zak.hpp"

using namespace zakotfs;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void progress_line(const char* what, std::size_t done, std::size_t total) {
    if (done == total || done % 25 == 0) std::fprintf(stderr, "  %s: %zu/%zu\n", what, done, total);
}

// Criterion 1 ---------------------------------------------------------------

Verdict zc_self_ambiguity_line() {
    const DDGrid g(31, 37);
    const std::int64_t MN = g.size();
    double on_dev = 0.0, off_max = 0.0;
    for (std::int64_t u : {11, 23}) {
        const AmbiguityMap A = self_ambiguity(zc_pilot_signal(ZCPilot(g, u)));
        for (std::int64_t k = 0; k < MN; ++k)
            for (std::int64_t l = 0; l < MN; ++l) {
                const double a = std::abs(A(k, l));
                if (mod(l + u * k, MN) == 0) on_dev = std::max(on_dev, std::abs(a - 1.0));
                else off_max = std::max(off_max, a);
            }
    }
    return {on_dev <= 1e-9 && off_max < 1e-9,
            "u in {11,23}, all 1147^2 shifts: max ||A|-1| on line " + fmt("%.2e", on_dev) + ", max |A| off line " +
                fmt("%.2e", off_max)};
}

// Criterion 2 ---------------------------------------------------------------

Verdict zc_cross_flatness() {
    const DDGrid g(35, 39);
    const double flat = 1.0 / std::sqrt(static_cast<double>(g.size()));
    const std::vector<std::int64_t> roots{7, 11, 13};
    bool all_flat = true;
    std::string detail = "M=35 N=39:";
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const AmbiguityMap A =
                cross_ambiguity(zc_signal_from_sequence(roots[i], g), zc_signal_from_sequence(roots[j], g));
            double dev = 0.0;
            for (const auto& v : A.values()) dev = std::max(dev, std::abs(std::abs(v) - flat));
            const bool ok = dev <= 1e-9;
            all_flat = all_flat && ok;
            detail += " (" + std::to_string(roots[i]) + "," + std::to_string(roots[j]) + ") dev " + fmt("%.2e", dev) +
                      (ok ? "" : " [gcd(u-w,MN)=" + std::to_string(gcd(roots[j] - roots[i], g.size())) + "]");
        }
    const DDGrid e(32, 37);
    const AmbiguityMap B = cross_ambiguity(zc_signal_from_sequence(11, e), zc_signal_from_sequence(13, e));
    double peak = 0.0;
    for (const auto& v : B.values()) peak = std::max(peak, std::abs(v));
    const double excess = peak * std::sqrt(static_cast<double>(e.size())) - 1.0;
    detail += "; M=32 counterexample peak exceeds 1/sqrt(MN) by " + fmt("%.0f%%", 100.0 * excess);
    return {all_flat && excess > 0.10, detail};
}

// Criterion 3 ---------------------------------------------------------------

Verdict gauss_sums() {
    double worst = 0.0;
    long count = 0;
    for (std::int64_t N = 1; N <= 101; N += 2)
        for (std::int64_t a = 1; a <= N; ++a) {
            if (gcd(a, N) != 1) continue;
            worst = std::max(worst, std::abs(gauss_sum_magnitude(N, a) - std::sqrt(static_cast<double>(N))));
            ++count;
        }
    return {worst < 1e-10, std::to_string(count) + " (N, a) pairs, max ||G|-sqrt(N)| " + fmt("%.2e", worst)};
}

// Criterion 4 ---------------------------------------------------------------

// max |a - e^{j phi} b| with the least-squares phase phi.
double phase_free_diff(const DDSignal& a, const DDSignal& b) {
    cplx c = inner(a, b);
    c /= std::abs(c);
    double d = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) d = std::max(d, std::abs(a.values()[i] - c * b.values()[i]));
    return d;
}

Verdict closed_forms() {
    const DDGrid g(31, 37);
    double zc = 0.0;
    for (std::int64_t u : {11, 23}) zc = std::max(zc, phase_free_diff(zc_pilot_signal(ZCPilot(g, u)),
                                                                   zc_signal_from_sequence(u, g)));
    // Chirp oracle: spread a point pilot at the origin with the filter
    // w[k, l] = xi_MN^{q (k^2 + l^2)} and fold onto the fundamental region.
    const std::int64_t M = g.M(), N = g.N(), MN = g.size(), q = 3;
    DDSignal direct(g);
    for (std::int64_t k = 0; k < M; ++k)
        for (std::int64_t l = 0; l < N; ++l) {
            cplx s{};
            for (std::int64_t n = 0; n < N; ++n)
                for (std::int64_t m = 0; m < M; ++m) {
                    const std::int64_t kk = k - n * M, ll = l - m * N;
                    s += std::polar(1.0, 2.0 * kPi * static_cast<double>(mul_mod(q, kk * kk + ll * ll, MN)) / MN) *
                         std::polar(1.0, 2.0 * kPi * static_cast<double>(mod(n * l, N)) / N);
                }
            direct(static_cast<int>(k), static_cast<int>(l)) = s;
        }
    direct *= cplx{1.0 / std::sqrt(direct.energy()), 0.0};
    const double chirp = phase_free_diff(chirp_pilot_signal(ChirpPilot(g, q)), direct);
    return {zc < 1e-9 && chirp < 1e-9,
            "ZC u in {11,23} vs Zak of sequence " + fmt("%.2e", zc) + "; chirp q=3 vs direct spreading " +
                fmt("%.2e", chirp)};
}

// Criterion 5 ---------------------------------------------------------------

Verdict papr() {
    const DDGrid g(31, 37);
    const int Q = 4;
    const double beta = 0.6;
    const double point =
        papr_db(oversampled_realization(point_pilot_signal(PointPilot(g, (31 + 1) / 2, (37 + 1) / 2)), Q, beta));
    const double zc = papr_db(oversampled_realization(zc_pilot_signal(ZCPilot(g, 23)), Q, beta));
    const double chirp = papr_db(oversampled_realization(chirp_pilot_signal(ChirpPilot(g, 3)), Q, beta));
    const bool ok_point = std::abs(point - 15.0) <= 1.5, ok_zc = std::abs(zc - 6.0) <= 1.5;
    return {ok_point && ok_zc, "Q=4 RRC 0.6: point " + fmt("%.2f dB", point) + (ok_point ? " (ok)" : " (out of 15+-1.5)") +
                                   ", ZC u=23 " + fmt("%.2f dB", zc) + (ok_zc ? " (ok)" : " (out of 6+-1.5)") +
                                   ", chirp q=3 " + fmt("%.2f dB", chirp)};
}

// Criterion 6 ---------------------------------------------------------------

Verdict crystallization() {
    const DDGrid g(31, 37, 30e3);
    const auto a = check_crystallization(g, VehA::max_delay(), 815.0);
    const auto b = check_crystallization(g, VehA::max_delay(), 6000.0);
    const bool ok = a.k_max == 3 && a.l_max == 3 && a.satisfied && b.l_max == 15 && b.satisfied;
    return {ok, "815 Hz -> (" + std::to_string(a.k_max) + ", " + std::to_string(a.l_max) + "), 6000 Hz -> l_max " +
                    std::to_string(b.l_max)};
}

// Criterion 7 ---------------------------------------------------------------

Verdict nmse_parity() {
    LinkConfig cfg;
    cfg.trials = 500;
    cfg.threads = default_threads();
    const auto rows = run_nmse(cfg, [](std::size_t d, std::size_t t) { progress_line("nmse", d, t); });
    std::map<std::string, std::vector<NmseRow>> curve;
    for (const auto& r : rows) curve[r.pilot].push_back(r);
    const auto& zc = curve.at("zc");
    const auto& ch = curve.at("chirp");

    double gap = 0.0;
    bool monotone = true;
    std::string line = "ZC/chirp dB:";
    for (std::size_t i = 0; i < zc.size(); ++i) {
        gap = std::max(gap, std::abs(zc[i].nmse_db - ch[i].nmse_db));
        line += " " + fmt("%.1f", zc[i].nmse_db) + "/" + fmt("%.1f", ch[i].nmse_db);
        for (const auto* c : {&zc, &ch})
            if (i > 0) {
                const auto& a = (*c)[i - 1];
                const auto& b = (*c)[i];
                if (b.nmse_db > a.nmse_db + std::hypot(a.stderr_db, b.stderr_db)) monotone = false;
            }
    }
    // Floor: the last step gains far less than the first one.
    const double first_gain = zc[0].nmse_db - zc[1].nmse_db;
    const double last_gain = zc[zc.size() - 2].nmse_db - zc.back().nmse_db;
    const bool floors = last_gain < 0.25 * first_gain;
    return {gap <= 0.5 && monotone && floors,
            "500 trials; max gap " + fmt("%.3f dB", gap) + (monotone ? ", non-increasing" : ", NOT monotone") +
                (floors ? ", floors" : ", no floor") + "; " + line};
}

// Criterion 8 ---------------------------------------------------------------

Verdict ber_turbo() {
    LinkConfig cfg;
    cfg.nu_max = 6000.0;
    const auto root = crystalline_zc_root(cfg.grid, cfg.region(), 11);
    if (!root) return {false, "no ZC root is crystalline at 6000 Hz"};
    cfg.pilots = {{PilotSpec::Kind::Zc, *root}};
    cfg.iterations = 5;
    cfg.trials = 160;
    cfg.threads = default_threads();
    const auto rows = run_ber(cfg, [](std::size_t d, std::size_t t) { progress_line("ber", d, t); });

    const std::size_t R = cfg.pdr_db.size();
    auto at = [&](std::size_t r, int it) -> const BerRow& { return rows[r * 5 + static_cast<std::size_t>(it - 1)]; };
    bool ordered = true;
    std::string viol, table = "BER it1/it3/it5:";
    for (std::size_t r = 0; r < R; ++r) {
        const BerRow &b1 = at(r, 1), &b3 = at(r, 3), &b5 = at(r, 5);
        table += " " + fmt("%.0f", cfg.pdr_db[r]) + "dB " + fmt("%.4f", b1.ber) + "/" + fmt("%.4f", b3.ber) + "/" +
                 fmt("%.4f", b5.ber);
        const bool ok53 = b5.ber <= b3.ber + std::hypot(b5.stderr_ber, b3.stderr_ber);
        const bool ok31 = b3.ber <= b1.ber + std::hypot(b3.stderr_ber, b1.stderr_ber);
        if (!ok53 || !ok31) {
            ordered = false;
            viol += " " + fmt("%.0f dB", cfg.pdr_db[r]) + (ok53 ? "" : " (5>3)") + (ok31 ? "" : " (3>1)");
        }
    }
    auto interior = [&](int it) {
        std::size_t best = 0;
        for (std::size_t r = 1; r < R; ++r)
            if (at(r, it).ber < at(best, it).ber) best = r;
        return best > 0 && best + 1 < R;
    };
    const bool u1 = interior(1), u5 = interior(5);
    return {ordered && u1,
            "root " + std::to_string(*root) + ", " + std::to_string(cfg.trials) + " trials; interior minimum it1 " +
                (u1 ? "yes" : "no") + ", it5 " + (u5 ? "yes" : "no") + "; ordering " +
                (ordered ? "holds" : "violated at" + viol) + "; " + table};
}

// Criterion 9 ---------------------------------------------------------------

bool exact_small_recovery() {
    const DDGrid g(5, 7, 30e3);
    const std::vector<std::int64_t> roots{2, 3, 4, 6};
    const ObservationMatrix A = build_observation_matrix(roots, g, PulseShapingFilter::ideal(), g.delay_resolution(),
                                                         g.doppler_resolution());
    const auto& H = A.sets.hypotheses;
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (const auto& ha : H)
                for (const auto& hb : H) {
                    DDSignal y = twisted_convolve(TapSet({{ha.k, ha.l, std::polar(1.0, phase(rng))}}),
                                                  zc_pilot_signal(ZCPilot(g, roots[static_cast<std::size_t>(a)])));
                    y += twisted_convolve(TapSet({{hb.k, hb.l, std::polar(1.0, phase(rng))}}),
                                          zc_pilot_signal(ZCPilot(g, roots[static_cast<std::size_t>(b)])));
                    if (ost_detect(A, y, 2, OstMode::OnGrid, {ha.k, hb.k}) != std::vector<int>{a, b}) return false;
                }
    return true;
}

Verdict rach_ordering() {
    RachConfig cfg;
    cfg.trials = 400;
    cfg.threads = default_threads();
    const RachResult res = run_rach(cfg, [](std::size_t d, std::size_t t) { progress_line("rach", d, t); });
    std::map<std::string, std::vector<RachRow>> c;
    for (const auto& r : res.rows) c[r.detector].push_back(r);
    const auto &on = c.at("on-grid"), &gr = c.at("blind-grouped"), &un = c.at("blind-ungrouped"),
               &ca = c.at("cross-ambiguity");
    const std::size_t S = cfg.snr_db.size();
    auto le = [](const RachRow& a, const RachRow& b) {
        return a.missed <= b.missed + std::hypot(a.stderr_missed, b.stderr_missed);
    };

    bool order = true, monotone = true;
    std::string table = "1-Pd on/grouped/ungrouped/xamb:";
    for (std::size_t s = 0; s < S; ++s) {
        table += " " + fmt("%.0f", cfg.snr_db[s]) + "dB " + fmt("%.3f", on[s].missed) + "/" + fmt("%.3f", gr[s].missed) +
                 "/" + fmt("%.3f", un[s].missed) + "/" + fmt("%.3f", ca[s].missed);
        order = order && le(on[s], gr[s]) && le(gr[s], un[s]);
        // cross-ambiguity comparison only in the upper half of the grid
        if (2 * s >= S) order = order && le(gr[s], ca[s]);
        for (const auto* curve : {&on, &gr, &un, &ca})
            if (s > 0) monotone = monotone && le((*curve)[s], (*curve)[s - 1]);
    }
    const bool exact = exact_small_recovery();
    return {order && monotone && exact,
            "K=" + std::to_string(cfg.active_users) + " of " + std::to_string(cfg.preambles) + ", " +
                std::to_string(cfg.trials) + " trials; ordering " + (order ? "holds" : "violated") + ", monotone " +
                (monotone ? "yes" : "no") + ", exact K=2 of 4 recovery at MN=35 " + (exact ? "yes" : "no") + "; " +
                table};
}

// Criterion 10 --------------------------------------------------------------

Verdict invariants() {
    using namespace zakotfs::properties;
    constexpr int kCases = 1000;
    constexpr double kTol = 1e-10;
    const std::pair<const char*, Outcome> out[] = {
        {"zak round trip", zak_round_trip(kCases, 1)},       {"parseval", parseval(kCases, 2)},
        {"identity", twisted_identity(kCases, 3)},           {"associativity", twisted_associativity(kCases, 4)},
        {"linearity", twisted_linearity(kCases, 5)},         {"quasi-periodicity", quasi_periodicity(kCases, 6)},
    };
    bool ok = true;
    std::string detail = std::to_string(kCases) + " cases each, worst:";
    for (const auto& [name, o] : out) {
        ok = ok && o.cases >= kCases && o.worst < kTol;
        detail += std::string(" ") + name + " " + fmt("%.1e", o.worst);
    }
    return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
        {1, zc_self_ambiguity_line}, {2, zc_cross_flatness}, {3, gauss_sums},    {4, closed_forms},
        {5, papr},                   {6, crystallization},   {7, nmse_parity},   {8, ber_turbo},
        {9, rach_ordering},          {10, invariants},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& [id, run] : criteria) {
        if (!only.empty() && !only.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  [%.1f s] %s\n", id, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
        std::fflush(stdout);
        failures += !v.pass;
    }
    return failures;
}
