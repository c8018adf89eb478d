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

#include <complex>

namespace zakotfs {

/// Unit-energy root-raised-cosine pulse in symbol units (unit spacing),
/// roll-off beta in [0, 1].
double rrc(double t, double beta);

/// Smallest W such that |rrc(t)| < rel * rrc(0) for every |t| > W.
double rrc_truncation(double beta, double rel = 1e-4);

/// Numerical evaluation of
///
///   Phi(s, phi) = integral g(x) g(s - x) exp(-j 2 pi phi x) dx
///
/// for the truncated RRC g. Step 1/oversample, support [-W, W] from
/// rrc_truncation. With phi = 0 and integer s this is the raised-cosine
/// Nyquist pulse.
std::complex<double> rrc_cross(double s, double phi, double beta, int oversample = 16, double rel = 1e-4);

}  // namespace zakotfs
