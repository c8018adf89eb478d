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

#include <span>
#include <vector>

#include "zakotfs/grid.hpp"
#include "zakotfs/roots.hpp"

namespace zakotfs {

/// Discrete quasi-periodic delay-Doppler signal.
///
/// Stores the fundamental region k in [0, M), l in [0, N) in k-major order
/// (index k * N + l). Any other integer (k, l) is reached through
/// quasi-periodicity:
///
///   X[k + nM, l + mN] = exp(j 2 pi n l / N) X[k, l].
class DDSignal {
public:
    explicit DDSignal(DDGrid grid);
    DDSignal(DDGrid grid, std::vector<cplx> values);

    const DDGrid& grid() const { return grid_; }

    /// Fundamental-region element, no range check.
    cplx operator()(int k, int l) const { return values_[static_cast<std::size_t>(k) * grid_.N() + l]; }
    cplx& operator()(int k, int l) { return values_[static_cast<std::size_t>(k) * grid_.N() + l]; }

    /// Quasi-periodic extension to any integer (k, l).
    cplx at(long long k, long long l) const;

    std::span<const cplx> values() const { return values_; }
    std::span<cplx> values() { return values_; }

    double energy() const;

    DDSignal& operator+=(const DDSignal& other);
    DDSignal& operator-=(const DDSignal& other);
    DDSignal& operator*=(cplx scale);

    friend DDSignal operator+(DDSignal a, const DDSignal& b) { return a += b; }
    friend DDSignal operator-(DDSignal a, const DDSignal& b) { return a -= b; }
    friend DDSignal operator*(DDSignal a, cplx s) { return a *= s; }
    friend DDSignal operator*(cplx s, DDSignal a) { return a *= s; }

private:
    void require_same_grid(const DDSignal& other) const;

    DDGrid grid_;
    std::vector<cplx> values_;
};

/// Inner product sum x conj(y) over the fundamental region.
cplx inner(const DDSignal& x, const DDSignal& y);

/// Time-domain samples of one Zak-OTFS subframe at Q times the critical
/// rate B (length Q * M * N).
class TDSignal {
public:
    TDSignal(std::vector<cplx> samples, double sample_rate_hz, int oversampling = 1);

    std::span<const cplx> samples() const { return samples_; }
    std::span<cplx> samples() { return samples_; }
    std::size_t size() const { return samples_.size(); }
    double sample_rate() const { return sample_rate_; }
    int oversampling() const { return oversampling_; }

    double energy() const;

private:
    std::vector<cplx> samples_;
    double sample_rate_;
    int oversampling_;
};

cplx inner(const TDSignal& x, const TDSignal& y);

}  // namespace zakotfs
