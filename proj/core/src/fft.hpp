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
#include <cstddef>

#include <fftw3.h>

namespace zakotfs::detail {

// Unnormalized length-n DFT. sign = -1 is the forward transform
// sum_n x[n] exp(-j 2 pi k n / n). Planning is serialized; execution on
// caller-provided buffers is thread-safe.
class Fft {
public:
    Fft(std::size_t n, int sign);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    void operator()(const std::complex<double>* in, std::complex<double>* out) const;

private:
    fftw_plan plan_;
};

}  // namespace zakotfs::detail
