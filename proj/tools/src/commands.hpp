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

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace zakotfs::cli {

/// Writes the CSV table for `command` to `csv` and returns extra metadata
/// for the sidecar (may be empty).
nlohmann::json run_command(const std::string& command, const ExperimentConfig& cfg, std::ostream& csv,
                           const Progress& progress = {});

/// Runs `command`, writing `out_path` and `out_path + ".json"`.
void run_to_files(const std::string& command, const ExperimentConfig& cfg, const std::string& out_path,
                  const Progress& progress = {});

}  // namespace zakotfs::cli
