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

// Randomized invariant checks shared by the unit and acceptance suites.
// Each returns the worst deviation observed over `cases` draws.

#pragma once

#include <cstdint>

namespace zakotfs::properties {

struct Outcome {
    double worst = 0.0;
    int cases = 0;
};

Outcome zak_round_trip(int cases, std::uint64_t seed);
Outcome parseval(int cases, std::uint64_t seed);
Outcome twisted_identity(int cases, std::uint64_t seed);
Outcome twisted_associativity(int cases, std::uint64_t seed);
Outcome twisted_linearity(int cases, std::uint64_t seed);
Outcome quasi_periodicity(int cases, std::uint64_t seed);

}  // namespace zakotfs::properties
