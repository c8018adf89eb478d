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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zakotfs/channel.hpp"
#include "zakotfs/errors.hpp"
#include "zakotfs/experiments.hpp"
#include "zakotfs/receiver.hpp"

using namespace zakotfs;
using namespace zakotfs::test;

namespace {

const DDGrid kGrid(31, 37);
const ReadoffRegion kRegion = ReadoffRegion::around(3, 3, 2);

}  // namespace

TEST(Readoff, RegionGeometry) {
    const ReadoffRegion r = ReadoffRegion::around(3, 3, 2);
    EXPECT_EQ(r.k_lo, -2);
    EXPECT_EQ(r.k_hi, 5);
    EXPECT_EQ(r.l_lo, -5);
    EXPECT_EQ(r.l_hi, 5);
    EXPECT_EQ(r.size(), 88);
    EXPECT_TRUE(r.contains(0, -5));
    EXPECT_FALSE(r.contains(6, 0));
}

TEST(Readoff, AliasingDetected) {
    EXPECT_NO_THROW(check_readoff(ZCPilot(kGrid, 11), kRegion));
    EXPECT_NO_THROW(check_readoff(ChirpPilot(kGrid, 3), kRegion));
    const ReadoffRegion wide = ReadoffRegion::around(3, 15, 2);
    EXPECT_THROW(check_readoff(ZCPilot(kGrid, 11), wide), CrystallizationError);
    EXPECT_EQ(crystalline_zc_root(kGrid, wide, 11), std::optional<std::int64_t>(35));
    EXPECT_NO_THROW(check_readoff(ZCPilot(kGrid, 35), wide));
}

TEST(Estimate, OnGridPathRecoveredExactly) {
    const cplx h{0.6, -0.8};
    const TapSet truth({{2, -1, h}});
    for (const SpreadPilot& p : {SpreadPilot{ZCPilot(kGrid, 11)}, SpreadPilot{ChirpPilot(kGrid, 3)}}) {
        const double Ep = 50.0;
        const DDSignal y = twisted_convolve(truth, pilot_signal(p) * cplx{std::sqrt(Ep), 0.0});
        const auto est = estimate_channel(y, p, Ep, kRegion);
        ASSERT_EQ(est.taps.size(), 1u);
        EXPECT_NEAR(std::abs(est.taps.value(2, -1) - h), 0.0, 1e-9);
    }
}

TEST(Estimate, VehAInsideRegionNoiseFree) {
    const PhysicalChannel ch = draw_veh_a(8, 815.0);
    const TapSet full = effective_channel(ch, PulseShapingFilter{}, kGrid).taps;
    std::vector<Tap> inside;
    for (const auto& t : full)
        if (kRegion.contains(t.k, t.l)) inside.push_back(t);
    const TapSet truth(inside);
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const auto est = estimate_channel(twisted_convolve(truth, pilot_signal(p)), p, 1.0, kRegion, 0.0);
    for (const auto& t : truth) EXPECT_NEAR(std::abs(est.taps.value(t.k, t.l) - t.value), 0.0, 1e-9);

    // The tail outside the region is small and partly aliases in along the
    // pilot's support line; the overall error stays tiny.
    const auto est_full = estimate_channel(twisted_convolve(full, pilot_signal(p)), p, 1.0, kRegion, 0.0);
    EXPECT_LT(nmse(est_full.taps, full), 1e-4);
}

TEST(Estimate, ZeroSignalAndPreconditions) {
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const auto est = estimate_channel(DDSignal(kGrid), p, 1.0, kRegion);
    for (const auto& t : est.taps) EXPECT_EQ(t.value, cplx{});
    EXPECT_THROW(estimate_channel(DDSignal(kGrid), p, 0.0, kRegion), PreconditionError);
    EXPECT_THROW(estimate_channel(DDSignal(DDGrid(5, 7)), p, 1.0, kRegion), DimensionError);
}

TEST(Estimate, ThresholdDropsSmallTaps) {
    const TapSet truth({{0, 0, 1.0}, {1, 1, 1e-4}});
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const DDSignal y = twisted_convolve(truth, pilot_signal(p));
    EXPECT_EQ(estimate_channel(y, p, 1.0, kRegion, 1e-3).taps.size(), 1u);
    EXPECT_EQ(estimate_channel(y, p, 1.0, kRegion, 1e-5).taps.size(), 2u);
}

TEST(Cancel, ExactZeroAndPartial) {
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const DDSignal unit = pilot_signal(p);
    const TapSet h = effective_channel(draw_veh_a(2, 815.0), PulseShapingFilter{}, kGrid).taps;
    const double Ep = 10.0;
    const DDSignal y = twisted_convolve(h, unit * cplx{std::sqrt(Ep), 0.0});
    EXPECT_LT(cancel_pilot(y, h, unit, Ep).energy(), 1e-18);
    EXPECT_LT(max_abs_diff(cancel_pilot(y, TapSet{}, unit, Ep), y), 1e-15);

    const TapSet partial = h.pruned(0.1);
    const TapSet err = add(h, partial, -1.0);
    const double expect = twisted_convolve(err, unit * cplx{std::sqrt(Ep), 0.0}).energy();
    EXPECT_NEAR(cancel_pilot(y, partial, unit, Ep).energy(), expect, 1e-10 * (1.0 + expect));
}

TEST(Qam4, DecisionsAndSymbols) {
    const double a = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(qam4_decide({0.3, -2.0}), cplx(a, -a));
    EXPECT_EQ(qam4_decide({-0.1, 0.1}), cplx(-a, a));
    std::mt19937_64 rng(1);
    for (const auto& s : random_qam4(1000, rng)) EXPECT_NEAR(std::norm(s), 1.0, 1e-15);
}

TEST(Lmmse, IdentityNoiseFree) {
    std::mt19937_64 rng(2);
    const auto s = random_qam4(kGrid.size(), rng);
    const Detection d = lmmse_detect(data_frame_signal(s, kGrid), TapSet::identity(), 0.0);
    EXPECT_EQ(ber(d.symbols, s), 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(std::abs(d.soft[i] - s[i]), 0.0, 1e-10);
}

TEST(Lmmse, ZeroForcingLimit) {
    std::mt19937_64 rng(3);
    const auto s = random_qam4(kGrid.size(), rng);
    const TapSet h({{0, 0, 1.0}, {1, 2, cplx{0.3, 0.1}}, {2, -1, cplx{-0.2, 0.25}}});
    const DDSignal y = twisted_convolve(h, data_frame_signal(s, kGrid));
    for (double var : {0.0, 1e-12}) {
        const Detection d = lmmse_detect(y, h, var);
        for (std::size_t i = 0; i < s.size(); ++i) ASSERT_NEAR(std::abs(d.soft[i] - s[i]), 0.0, 1e-6);
    }
}

TEST(Lmmse, SingularChannelWithoutRegularizationThrows) {
    const TapSet h({{0, 0, 1.0}, {1, 0, -1.0}});
    EXPECT_THROW(lmmse_detect(DDSignal(kGrid), h, 0.0), NumericalError);
    EXPECT_NO_THROW(lmmse_detect(DDSignal(kGrid), h, 0.1));
    EXPECT_THROW(lmmse_detect(DDSignal(kGrid), h, -1.0), PreconditionError);
}

TEST(Metrics, NmseAndBer) {
    const TapSet t({{0, 0, 1.0}, {1, 0, cplx{0.0, 1.0}}});
    EXPECT_EQ(nmse(t, t), 0.0);
    EXPECT_DOUBLE_EQ(nmse(TapSet{}, t), 1.0);
    EXPECT_THROW(nmse(t, TapSet{}), NumericalError);

    std::mt19937_64 rng(4);
    const auto s = random_qam4(200, rng);
    auto flipped = s;
    for (auto& v : flipped) v = std::conj(v);
    EXPECT_EQ(ber(s, s), 0.0);
    EXPECT_DOUBLE_EQ(ber(flipped, s), 0.5);
    EXPECT_THROW(ber(std::vector<cplx>(3), s), DimensionError);
}

TEST(Turbo, ConvergesToNoiseFreeFixedPoint) {
    const TapSet truth({{1, 1, cplx{0.8, 0.0}}, {2, -2, cplx{0.0, 0.6}}});
    std::mt19937_64 rng(5);
    const auto s = random_qam4(kGrid.size(), rng);
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const double Ep = pilot_energy_for(20.0, PdrReference::Frame, kGrid);
    const DDSignal y = twisted_convolve(truth, data_frame_signal(s, kGrid) + pilot_signal(p) * cplx{std::sqrt(Ep), 0.0});
    const FramePlan plan{p, Ep, 0.0, kRegion};
    const TurboResult r = turbo_iterate(y, plan, 6, &truth, s);
    ASSERT_EQ(r.ber.size(), 6u);
    for (std::size_t i = 1; i < 6; ++i) EXPECT_LT(r.nmse[i], r.nmse[i - 1]);
    EXPECT_LT(r.nmse[5], 1e-20);
    // once every decision is right nothing changes but the residual estimate error
    for (std::size_t i = 2; i < 6; ++i) {
        EXPECT_EQ(r.ber[i], 0.0);
        EXPECT_EQ(r.decisions[i], r.decisions[1]);
    }
    for (const auto& t : r.estimates[5].taps) EXPECT_NEAR(std::abs(t.value - truth.value(t.k, t.l)), 0.0, 1e-10);
    EXPECT_THROW(turbo_iterate(y, plan, 0), PreconditionError);
}

TEST(Turbo, IterationsDoNotHurtOnAverage) {
    LinkConfig cfg;
    cfg.pilots = {{PilotSpec::Kind::Zc, 11}};
    cfg.pdr_db = {20.0};
    cfg.iterations = 3;
    cfg.trials = 30;
    const auto rows = run_ber(cfg);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_LE(rows[2].ber, rows[0].ber);
}

TEST(SeparateSubframe, IdentityChannelNoiseFree) {
    std::mt19937_64 rng(6);
    const auto s = random_qam4(kGrid.size(), rng);
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const FramePlan plan{p, 1.0, 0.0, kRegion};
    ChannelEstimate est;
    const Detection d = separate_subframe_detect(pilot_signal(p), data_frame_signal(s, kGrid), plan, &est);
    EXPECT_EQ(ber(d.symbols, s), 0.0);
    EXPECT_NEAR(std::abs(est.taps.value(0, 0) - 1.0), 0.0, 1e-9);
}

TEST(Experiments, PilotEnergyReference) {
    EXPECT_DOUBLE_EQ(pilot_energy_for(0.0, PdrReference::Frame, kGrid), 1147.0);
    EXPECT_NEAR(pilot_energy_for(10.0, PdrReference::Symbol, kGrid), 10.0, 1e-12);
    LinkConfig c;
    c.nu_max = 60000.0;
    c.grid = DDGrid(31, 5);
    EXPECT_THROW(c.region(), CrystallizationError);
}

TEST(Experiments, NmseDeterministicAndShaped) {
    LinkConfig cfg;
    cfg.trials = 20;
    cfg.pdr_db = {0.0, 20.0, 40.0};
    const auto a = run_nmse(cfg);
    const auto b = run_nmse(cfg);
    ASSERT_EQ(a.size(), 6u);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].nmse, b[i].nmse);
    EXPECT_GT(a[0].nmse_db, a[1].nmse_db);
    cfg.threads = 3;
    const auto c = run_nmse(cfg);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].nmse, c[i].nmse);
}
