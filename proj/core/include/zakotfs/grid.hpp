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

#include <compare>

namespace zakotfs {

/// Delay-Doppler lattice: M delay bins and N Doppler bins per period.
///
/// Only the Doppler period is stored; the delay period is its reciprocal,
/// so tau_p * nu_p == 1 holds by construction. Bandwidth B = M nu_p and
/// duration T = N tau_p give B T = M N.
class DDGrid {
public:
    DDGrid(int M, int N, double doppler_period_hz = 30.0e3);

    int M() const { return M_; }
    int N() const { return N_; }
    int size() const { return M_ * N_; }

    double doppler_period() const { return nu_p_; }
    double delay_period() const { return 1.0 / nu_p_; }
    double bandwidth() const { return M_ * nu_p_; }
    double duration() const { return N_ * delay_period(); }

    /// Delay resolution tau_p / M = 1 / B.
    double delay_resolution() const { return 1.0 / bandwidth(); }
    /// Doppler resolution nu_p / N = 1 / T.
    double doppler_resolution() const { return nu_p_ / N_; }

    bool odd_coprime() const;

    /// Throws PreconditionError unless M, N are odd and coprime.
    void require_odd_coprime() const;

    bool operator==(const DDGrid&) const = default;

private:
    int M_;
    int N_;
    double nu_p_;
};

}  // namespace zakotfs
