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

// Experiment configuration: a JSON document whose objects mirror the
// library structs. Unknown keys are errors; missing keys take defaults.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zakotfs/experiments.hpp"

namespace zakotfs::cli {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguityOptions {
    bool nonzero_only = true;
    double threshold = 1e-9;  // rows with |A| below this are dropped when nonzero_only
};

struct PaprOptions {
    int oversampling = 4;
    bool include_point = true;
};

struct ExperimentConfig {
    LinkConfig link;
    RachConfig rach;
    AmbiguityOptions ambiguity;
    PaprOptions papr;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    /// Pushes trials, seed and threads down into the link and rach blocks.
    void propagate();
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace zakotfs::cli
