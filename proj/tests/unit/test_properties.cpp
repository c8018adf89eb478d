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

#include "properties.hpp"

using namespace zakotfs::properties;

namespace {
constexpr int kCases = 1000;
constexpr double kTol = 1e-10;
}  // namespace

TEST(Properties, ZakRoundTrip) {
    const auto o = zak_round_trip(kCases, 101);
    EXPECT_EQ(o.cases, kCases);
    EXPECT_LT(o.worst, kTol);
}

TEST(Properties, Parseval) { EXPECT_LT(parseval(kCases, 102).worst, kTol); }

TEST(Properties, TwistedIdentity) { EXPECT_LT(twisted_identity(kCases, 103).worst, kTol); }

TEST(Properties, TwistedAssociativity) { EXPECT_LT(twisted_associativity(kCases, 104).worst, kTol); }

TEST(Properties, TwistedLinearity) { EXPECT_LT(twisted_linearity(kCases, 105).worst, kTol); }

TEST(Properties, QuasiPeriodicAccessor) { EXPECT_LT(quasi_periodicity(kCases, 106).worst, kTol); }
