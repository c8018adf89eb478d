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

#include <vector>

#include "zakotfs/dd_signal.hpp"

namespace zakotfs {

class ZCPilot;

/// Discrete ambiguity over all MN x MN shifts:
///
///   A[k, l] = sum_{k', l'} x[k', l'] conj(y[k' - k, l' - l]) xi_MN^{-l (k' - k)}
///
/// which is <x, T_{k,l} y> with T_{k,l} the single-tap twisted shift.
/// Stored row-major in k (index k * MN + l), k, l in [0, MN).
class AmbiguityMap {
public:
    AmbiguityMap(DDGrid grid, std::vector<cplx> values);

    const DDGrid& grid() const { return grid_; }
    int extent() const { return grid_.size(); }

    /// Shifts are reduced mod MN.
    cplx operator()(long long k, long long l) const;
    const std::vector<cplx>& values() const { return values_; }

private:
    DDGrid grid_;
    std::vector<cplx> values_;
};

/// Full surface, one length-MN FFT per delay shift.
AmbiguityMap cross_ambiguity(const DDSignal& x, const DDSignal& y);
AmbiguityMap self_ambiguity(const DDSignal& x);

/// Direct evaluation of the defining sum at one shift (any integers).
cplx ambiguity_at(const DDSignal& x, const DDSignal& y, long long k, long long l);

/// Direct evaluation on the rectangle k in [k_lo, k_hi], l in [l_lo, l_hi];
/// result is row-major in k.
std::vector<cplx> ambiguity_window(const DDSignal& x, const DDSignal& y, int k_lo, int k_hi, int l_lo,
                                   int l_hi);

/// max over all shifts of |A_{y, z}| where z is the ZC pilot. A ZC
/// sequence turns every delay shift into a frequency shift, so the whole
/// surface is a relabelling of a single FFT.
double max_zc_cross_ambiguity(const DDSignal& y, const ZCPilot& z);

}  // namespace zakotfs
