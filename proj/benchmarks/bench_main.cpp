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

#include <benchmark/benchmark.h>

#include <random>

#include "zakotfs/ambiguity.hpp"
#include "zakotfs/channel.hpp"
#include "zakotfs/rach.hpp"
#include "zakotfs/receiver.hpp"
#include "zakotfs/zak.hpp"

using namespace zakotfs;

namespace {

const DDGrid kGrid(31, 37);

DDSignal random_signal(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    DDSignal x(kGrid);
    for (auto& v : x.values()) v = {g(rng), g(rng)};
    return x;
}

TapSet veh_a_taps(double nu_max) {
    return effective_channel(draw_veh_a(1, nu_max), PulseShapingFilter{}, kGrid).taps;
}

}  // namespace

static void BM_Zak(benchmark::State& st) {
    const TDSignal td = inverse_zak_transform(random_signal(1));
    for (auto _ : st) benchmark::DoNotOptimize(zak_transform(td, kGrid));
}
BENCHMARK(BM_Zak)->Unit(benchmark::kMicrosecond);

static void BM_InverseZak(benchmark::State& st) {
    const DDSignal x = random_signal(2);
    for (auto _ : st) benchmark::DoNotOptimize(inverse_zak_transform(x));
}
BENCHMARK(BM_InverseZak)->Unit(benchmark::kMicrosecond);

static void BM_TwistedConvolve(benchmark::State& st) {
    const DDSignal x = random_signal(3);
    const TapSet h = veh_a_taps(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(twisted_convolve(h, x));
    st.counters["taps"] = static_cast<double>(h.size());
}
BENCHMARK(BM_TwistedConvolve)->Arg(815)->Arg(6000)->Unit(benchmark::kMicrosecond);

static void BM_SelfAmbiguitySurface(benchmark::State& st) {
    const DDSignal z = zc_pilot_signal(ZCPilot(kGrid, 11));
    for (auto _ : st) benchmark::DoNotOptimize(self_ambiguity(z));
}
BENCHMARK(BM_SelfAmbiguitySurface)->Unit(benchmark::kMillisecond);

static void BM_ZcFastPath(benchmark::State& st) {
    const DDSignal y = random_signal(4);
    const ZCPilot z(kGrid, 11);
    for (auto _ : st) benchmark::DoNotOptimize(max_zc_cross_ambiguity(y, z));
}
BENCHMARK(BM_ZcFastPath)->Unit(benchmark::kMicrosecond);

static void BM_EffectiveChannel(benchmark::State& st) {
    const PhysicalChannel ch = draw_veh_a(5, static_cast<double>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(effective_channel(ch, PulseShapingFilter{}, kGrid));
}
BENCHMARK(BM_EffectiveChannel)->Arg(815)->Arg(6000)->Unit(benchmark::kMicrosecond);

static void BM_EstimateChannel(benchmark::State& st) {
    const DDSignal y = random_signal(6);
    const SpreadPilot p = ZCPilot(kGrid, 11);
    const ReadoffRegion r = ReadoffRegion::around(3, 3, 2);
    for (auto _ : st) benchmark::DoNotOptimize(estimate_channel(y, p, 100.0, r));
}
BENCHMARK(BM_EstimateChannel)->Unit(benchmark::kMicrosecond);

static void BM_Lmmse(benchmark::State& st) {
    const DDSignal y = random_signal(7);
    const TapSet h = veh_a_taps(st.range(0)).pruned(1e-3);
    for (auto _ : st) benchmark::DoNotOptimize(lmmse_detect(y, h, 0.01));
    st.counters["taps"] = static_cast<double>(h.size());
}
BENCHMARK(BM_Lmmse)->Arg(815)->Arg(6000)->Unit(benchmark::kMillisecond);

static void BM_ObservationMatrix(benchmark::State& st) {
    const auto roots = draw_preamble_roots(kGrid, 16, 7);
    for (auto _ : st)
        benchmark::DoNotOptimize(build_observation_matrix(roots, kGrid, PulseShapingFilter{}, 2.51e-6, 815.0));
}
BENCHMARK(BM_ObservationMatrix)->Unit(benchmark::kMillisecond);

static void BM_OstDetect(benchmark::State& st) {
    const auto roots = draw_preamble_roots(kGrid, 16, 7);
    const ObservationMatrix A = build_observation_matrix(roots, kGrid, PulseShapingFilter{}, 2.51e-6, 815.0);
    const DDSignal y = random_signal(8);
    for (auto _ : st) benchmark::DoNotOptimize(ost_detect(A, y, 4, OstMode::BlindGrouped));
}
BENCHMARK(BM_OstDetect)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
