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

namespace zakotfs {

/// Euclidean residue: always in [0, m) for m > 0.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Floor division for a possibly negative numerator and m > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
    return (a - mod(a, m)) / m;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Multiplicative inverse of a modulo m via the extended Euclidean algorithm.
/// Empty when gcd(a, m) != 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

/// (a * b) mod m without overflow for |a|, |b| < 2^62.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace zakotfs
