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

#include "zakotfs/pulse.hpp"

#include <cmath>

#include "zakotfs/errors.hpp"
#include "zakotfs/roots.hpp"

namespace zakotfs {

double rrc(double t, double beta) {
    if (beta < 0.0 || beta > 1.0) throw PreconditionError("rrc: roll-off must lie in [0, 1]");
    if (std::abs(t) < 1e-12) return 1.0 - beta + 4.0 * beta / kPi;
    if (beta > 0.0 && std::abs(1.0 - 16.0 * beta * beta * t * t) < 1e-10) {
        const double a = kPi / (4.0 * beta);
        return beta / std::sqrt(2.0) * ((1.0 + 2.0 / kPi) * std::sin(a) + (1.0 - 2.0 / kPi) * std::cos(a));
    }
    const double num = std::sin(kPi * t * (1.0 - beta)) + 4.0 * beta * t * std::cos(kPi * t * (1.0 + beta));
    const double den = kPi * t * (1.0 - 16.0 * beta * beta * t * t);
    return num / den;
}

double rrc_truncation(double beta, double rel) {
    const double floor = rel * rrc(0.0, beta);
    // Scan inward from far out on a fine grid; the tail is monotone in envelope
    // well before this range.
    const double step = 1.0 / 64.0;
    for (double t = 400.0; t > 0.0; t -= step)
        if (std::abs(rrc(t, beta)) >= floor) return t + step;
    return step;
}

std::complex<double> rrc_cross(double s, double phi, double beta, int oversample, double rel) {
    const double W = rrc_truncation(beta, rel);
    const double h = 1.0 / oversample;
    const long jmax = static_cast<long>(std::floor(W * oversample));
    std::complex<double> acc{};
    for (long j = -jmax; j <= jmax; ++j) {
        const double x = j * h;
        const double t = s - x;
        if (std::abs(t) > W) continue;
        acc += rrc(x, beta) * rrc(t, beta) * std::polar(1.0, -2.0 * kPi * phi * x);
    }
    return acc * h;
}

}  // namespace zakotfs
