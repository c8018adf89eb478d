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

#include <stdexcept>
#include <string>

namespace zakotfs {

// Shapes or lengths of two operands do not agree.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A domain object could not be built from the given parameters.
class ConstructionError : public std::invalid_argument {
public:
    explicit ConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called outside the hypotheses it is defined for.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Channel read-off region aliases with a translate of the pilot's
// self-ambiguity support.
class CrystallizationError : public std::runtime_error {
public:
    explicit CrystallizationError(const std::string& what) : std::runtime_error(what) {}
};

// Singular systems, zero-energy normalizers, non-converging solvers.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] void throw_dimension(const std::string& what);

}  // namespace zakotfs
