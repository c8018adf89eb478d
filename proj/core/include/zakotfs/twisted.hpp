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

#include "zakotfs/dd_signal.hpp"

namespace zakotfs {

struct Tap {
    int k;
    int l;
    cplx value;
};

/// Finite discrete delay-Doppler filter, kept sorted by (k, l) with unique
/// positions so that every accumulation over it runs in the same order.
class TapSet {
public:
    TapSet() = default;
    /// Duplicate positions are summed.
    explicit TapSet(std::vector<Tap> taps);

    static TapSet identity() { return TapSet({Tap{0, 0, cplx{1.0, 0.0}}}); }

    std::span<const Tap> taps() const { return taps_; }
    std::size_t size() const { return taps_.size(); }
    bool empty() const { return taps_.empty(); }

    /// Value at (k, l); zero when absent.
    cplx value(int k, int l) const;

    double energy() const;

    /// Drops taps whose magnitude is below `threshold`.
    TapSet pruned(double threshold) const;

    auto begin() const { return taps_.begin(); }
    auto end() const { return taps_.end(); }

private:
    std::vector<Tap> taps_;
};

/// a *_sigma b for a finite filter and a quasi-periodic signal:
///
///   y[k, l] = sum_{k', l'} a[k', l'] b[k - k', l - l'] exp(j 2 pi l' (k - k') / MN).
///
/// An empty filter gives the zero signal.
DDSignal twisted_convolve(const TapSet& a, const DDSignal& b);

/// Composition of two finite filters under the same product; satisfies
/// twisted_convolve(twisted_convolve(a, b), x) == twisted_convolve(a, twisted_convolve(b, x)).
TapSet twisted_convolve(const TapSet& a, const TapSet& b, const DDGrid& grid);

/// Element-wise a + s b over the union of supports.
TapSet add(const TapSet& a, const TapSet& b, cplx s = cplx{1.0, 0.0});

}  // namespace zakotfs
