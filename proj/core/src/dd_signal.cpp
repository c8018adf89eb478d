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

#include "zakotfs/dd_signal.hpp"

#include <string>

#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"

namespace zakotfs {

DDSignal::DDSignal(DDGrid grid) : grid_(grid), values_(static_cast<std::size_t>(grid.size())) {}

DDSignal::DDSignal(DDGrid grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.size()))
        throw DimensionError("DDSignal: expected " + std::to_string(grid_.size()) + " values, got " +
                             std::to_string(values_.size()));
}

cplx DDSignal::at(long long k, long long l) const {
    const std::int64_t M = grid_.M(), N = grid_.N();
    const std::int64_t n = floor_div(k, M);
    const std::int64_t r = k - n * M;
    const std::int64_t lm = mod(l, N);
    const cplx v = values_[static_cast<std::size_t>(r * N + lm)];
    if (n == 0) return v;
    return root_of_unity(mul_mod(n, lm, N), N) * v;
}

double DDSignal::energy() const {
    double e = 0.0;
    for (const auto& v : values_) e += std::norm(v);
    return e;
}

void DDSignal::require_same_grid(const DDSignal& other) const {
    if (!(grid_ == other.grid_)) throw DimensionError("DDSignal: grid mismatch");
}

DDSignal& DDSignal::operator+=(const DDSignal& other) {
    require_same_grid(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

DDSignal& DDSignal::operator-=(const DDSignal& other) {
    require_same_grid(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

DDSignal& DDSignal::operator*=(cplx scale) {
    for (auto& v : values_) v *= scale;
    return *this;
}

cplx inner(const DDSignal& x, const DDSignal& y) {
    if (!(x.grid() == y.grid())) throw DimensionError("inner: grid mismatch");
    cplx s{};
    const auto a = x.values();
    const auto b = y.values();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

TDSignal::TDSignal(std::vector<cplx> samples, double sample_rate_hz, int oversampling)
    : samples_(std::move(samples)), sample_rate_(sample_rate_hz), oversampling_(oversampling) {
    if (oversampling < 1) throw ConstructionError("TDSignal: oversampling must be >= 1");
    if (!(sample_rate_hz > 0.0)) throw ConstructionError("TDSignal: sample rate must be positive");
}

double TDSignal::energy() const {
    double e = 0.0;
    for (const auto& v : samples_) e += std::norm(v);
    return e;
}

cplx inner(const TDSignal& x, const TDSignal& y) {
    if (x.size() != y.size()) throw DimensionError("inner: length mismatch");
    cplx s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += x.samples()[i] * std::conj(y.samples()[i]);
    return s;
}

}  // namespace zakotfs
