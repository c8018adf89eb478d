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

#include "zakotfs/dd_signal.hpp"

namespace zakotfs {

/// Discrete Zak transform of a critically sampled subframe:
///
///   X[k, l] = (1 / sqrt(N)) sum_{p=0}^{N-1} x[k + pM] xi_N^{-pl}.
///
/// Unitary. Throws DimensionError unless td has Q = 1 and length M N.
DDSignal zak_transform(const TDSignal& td, const DDGrid& grid);

/// Inverse of zak_transform; returns MN samples at rate B.
TDSignal inverse_zak_transform(const DDSignal& dd);

/// 10 log10(peak power / mean power). Throws NumericalError on a zero signal.
double papr_db(const TDSignal& td);

}  // namespace zakotfs
